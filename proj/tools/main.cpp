// invkl: exact inverse Kazhdan-Lusztig (Q) and inverse Z (Y) polynomials of
// graphic matroids, with fast fan-specific routes, a generic recursive
// solver for small graphs, and built-in cross-validation suites.
//
// Exit codes: 0 success, 1 mathematical inconsistency or suite failure,
// 2 usage or cap violation.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "invkl/errors.hpp"
#include "invkl/fan.hpp"
#include "invkl/graph.hpp"
#include "invkl/kls.hpp"
#include "invkl/poly.hpp"
#include "invkl/series.hpp"

namespace {

using invkl::Int;
using invkl::IntPoly;
using ordered_json = nlohmann::ordered_json;

std::vector<std::string> decimal_strings(const std::vector<Int>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Int& c : v) out.push_back(c.get_str());
  return out;
}

std::string joined(const std::vector<std::string>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

// One output record: an indexed polynomial (or scalar) plus provenance.
struct Row {
  int n = 0;
  std::string invariant;
  std::string method;
  std::vector<std::string> coefficients;
  std::string text;             // canonical textual form
  std::vector<std::string> b;   // b-expansion row, when present
  bool has_b = false;
};

Row poly_row(int n, std::string invariant, std::string method, const IntPoly& p) {
  Row r;
  r.n = n;
  r.invariant = std::move(invariant);
  r.method = std::move(method);
  r.coefficients = decimal_strings(p.coeffs());
  r.text = p.str();
  return r;
}

void emit(const std::vector<Row>& rows, const std::string& format, bool single) {
  if (format == "text") {
    for (const Row& r : rows) {
      if (!single) std::cout << "n=" << r.n << ": ";
      std::cout << r.text;
      if (r.has_b) std::cout << " with b-row [" << joined(r.b, ',') << ']';
      std::cout << '\n';
    }
  } else if (format == "json") {
    auto to_json = [](const Row& r) {
      ordered_json j;
      j["n"] = r.n;
      j["invariant"] = r.invariant;
      j["method"] = r.method;
      j["coefficients"] = r.coefficients;
      if (r.has_b) j["b"] = r.b;
      return j;
    };
    if (single) {
      std::cout << to_json(rows.front()).dump() << '\n';
    } else {
      ordered_json arr = ordered_json::array();
      for (const Row& r : rows) arr.push_back(to_json(r));
      std::cout << arr.dump() << '\n';
    }
  } else {  // csv
    bool with_b = false;
    for (const Row& r : rows) with_b = with_b || r.has_b;
    std::cout << "n,invariant,method,coefficients" << (with_b ? ",b" : "") << '\n';
    for (const Row& r : rows) {
      std::cout << r.n << ',' << r.invariant << ',' << r.method << ','
                << joined(r.coefficients, ' ');
      if (with_b) std::cout << ',' << joined(r.b, ' ');
      std::cout << '\n';
    }
  }
}

std::vector<Row> q_rows(int lo, int hi, const std::string& method, int oracle_cap) {
  std::vector<Row> rows;
  if (method == "closed") {
    for (int n = lo; n <= hi; ++n)
      rows.push_back(poly_row(n, "Q", method, invkl::q_fan_closed(n)));
  } else if (method == "recurrence") {
    const auto seq = invkl::q_fan_recurrence(hi);
    for (int n = lo; n <= hi; ++n)
      rows.push_back(poly_row(n, "Q", method, seq[static_cast<std::size_t>(n)]));
  } else if (method == "catalan-gf") {
    const auto seq = invkl::q_fan_from_gf(hi);
    for (int n = lo; n <= hi; ++n)
      rows.push_back(poly_row(n, "Q", method, seq[static_cast<std::size_t>(n)]));
  } else if (method == "deletion") {
    const auto seq = invkl::q_fan_deletion(hi);
    for (int n = lo; n <= hi; ++n)
      rows.push_back(poly_row(n, "Q", method, seq[static_cast<std::size_t>(n)]));
  } else {  // oracle
    for (int n = lo; n <= hi; ++n)
      rows.push_back(poly_row(n, "Q", method, invkl::q_fan_oracle(n, oracle_cap)));
  }
  return rows;
}

std::vector<Row> y_rows(int lo, int hi, const std::string& method, int oracle_cap) {
  std::vector<Row> rows;
  if (method == "closed") {
    for (int n = lo; n <= hi; ++n)
      rows.push_back(poly_row(n, "Y", method, invkl::y_fan_closed(n)));
  } else if (method == "deletion") {
    const auto seq = invkl::y_fan_deletion(hi);
    for (int n = lo; n <= hi; ++n)
      rows.push_back(poly_row(n, "Y", method, seq[static_cast<std::size_t>(n)]));
  } else if (method == "gf") {
    const auto seq = invkl::y_fan_from_gf(hi);
    for (int n = lo; n <= hi; ++n)
      rows.push_back(poly_row(n, "Y", method, seq[static_cast<std::size_t>(n)]));
  } else if (method == "oracle") {
    for (int n = lo; n <= hi; ++n)
      rows.push_back(poly_row(n, "Y", method, invkl::y_fan_oracle(n, oracle_cap)));
  } else {  // b-expansion
    for (int n = lo; n <= hi; ++n) {
      Row r = poly_row(n, "Y", method, invkl::b_expansion_reconstruct(n));
      r.b = decimal_strings(invkl::b_coefficients(n));
      r.has_b = true;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

int parse_int(const std::string& tok, const std::string& where) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(where + ": expected an integer, got '" + tok + "'");
  }
}

// Format: first line "vertices N", then one edge "u v" per line (0-based
// labels).  Blank lines are skipped.
invkl::Multigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  int n = 0;
  bool header_seen = false;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    if (!header_seen) {
      if (first != "vertices")
        throw std::invalid_argument(where + ": expected 'vertices N' as the first line");
      std::string count;
      if (!(ss >> count)) throw std::invalid_argument(where + ": missing vertex count");
      n = parse_int(count, where);
      std::string rest;
      if (ss >> rest) throw std::invalid_argument(where + ": trailing tokens after vertex count");
      header_seen = true;
    } else {
      std::string second, rest;
      if (!(ss >> second)) throw std::invalid_argument(where + ": expected 'u v'");
      if (ss >> rest) throw std::invalid_argument(where + ": trailing tokens after edge");
      edges.emplace_back(parse_int(first, where), parse_int(second, where));
    }
  }
  if (!header_seen) throw std::invalid_argument(path + ": empty graph file");
  return invkl::Multigraph(n, std::move(edges));
}

int run_graph(const std::string& file, const std::string& invariant, int vertex_cap,
              const std::string& format) {
  const invkl::Multigraph g = read_graph_file(file);
  const int n = g.n_vertices();
  Row r;
  if (invariant == "q") {
    const int cap = vertex_cap > 0 ? vertex_cap : invkl::kCompositionVertexCap;
    r = poly_row(n, "Q", "graph", invkl::q_graph(g, cap));
  } else if (invariant == "y") {
    const int cap = vertex_cap > 0 ? vertex_cap : invkl::kCompositionVertexCap;
    r = poly_row(n, "Y", "graph", invkl::y_graph(g, cap));
  } else if (invariant == "chromatic") {
    const int cap = vertex_cap > 0 ? vertex_cap : invkl::kChromaticVertexCap;
    r = poly_row(n, "chromatic", "graph", invkl::chromatic_polynomial(g, cap));
  } else if (invariant == "characteristic") {
    const int cap = vertex_cap > 0 ? vertex_cap : invkl::kChromaticVertexCap;
    r = poly_row(n, "characteristic", "graph", invkl::characteristic_polynomial(g, cap));
  } else {  // mobius
    const int cap = vertex_cap > 0 ? vertex_cap : invkl::kChromaticVertexCap;
    const Int mu = invkl::mobius_invariant(g, cap);
    r.n = n;
    r.invariant = "mobius";
    r.method = "graph";
    r.coefficients = {mu.get_str()};
    r.text = mu.get_str();  // a scalar, printed bare in text format
  }
  emit({r}, format, /*single=*/true);
  return 0;
}

struct SuiteOutcome {
  std::string name;
  bool pass;
  std::string detail;  // covered range, or the first counterexample
};

SuiteOutcome run_q_cross(int m) {
  const auto rec = invkl::q_fan_recurrence(m);
  const auto gf = invkl::q_fan_from_gf(m);
  const auto del = invkl::q_fan_deletion(m);
  for (int n = 0; n <= m; ++n) {
    const std::size_t i = static_cast<std::size_t>(n);
    const IntPoly closed = invkl::q_fan_closed(n);
    const char* other = nullptr;
    const IntPoly* got = nullptr;
    if (rec[i] != closed) {
      other = "recurrence";
      got = &rec[i];
    } else if (gf[i] != closed) {
      other = "catalan-gf";
      got = &gf[i];
    } else if (del[i] != closed) {
      other = "deletion";
      got = &del[i];
    }
    if (other)
      return {"q-cross", false,
              "at n=" + std::to_string(n) + ": closed=" + closed.str() + " " + other + "=" +
                  got->str()};
  }
  return {"q-cross", true, "0 <= n <= " + std::to_string(m)};
}

SuiteOutcome run_y_cross(int m) {
  const auto del = invkl::y_fan_deletion(m);
  const auto gf = invkl::y_fan_from_gf(m);
  for (int n = 0; n <= m; ++n) {
    const std::size_t i = static_cast<std::size_t>(n);
    const IntPoly closed = invkl::y_fan_closed(n);
    if (del[i] != closed)
      return {"y-cross", false,
              "at n=" + std::to_string(n) + ": closed=" + closed.str() +
                  " deletion=" + del[i].str()};
    if (gf[i] != closed)
      return {"y-cross", false,
              "at n=" + std::to_string(n) + ": closed=" + closed.str() + " gf=" + gf[i].str()};
    if (!invkl::is_palindromic(closed, n))
      return {"y-cross", false,
              "at n=" + std::to_string(n) + ": " + closed.str() +
                  " is not palindromic of degree " + std::to_string(n)};
    if (n >= 1) {
      const IntPoly rebuilt = invkl::b_expansion_reconstruct(n);
      if (rebuilt != closed)
        return {"y-cross", false,
                "at n=" + std::to_string(n) + ": b-expansion rebuilt " + rebuilt.str() +
                    ", closed form " + closed.str()};
    }
  }
  return {"y-cross", true, "0 <= n <= " + std::to_string(m)};
}

SuiteOutcome run_weights(int m) {
  if (m > invkl::kCPrimeCap)
    throw invkl::cap_error("weights suite: max-n must be <= " +
                           std::to_string(invkl::kCPrimeCap) +
                           " (structure enumeration cap), got " + std::to_string(m));
  for (int n = 1; n <= m; ++n) {
    IntPoly w_sum, wt_sum;
    for (const auto& a : invkl::cprime_structures(n)) {
      w_sum += invkl::weight_w(a);
      wt_sum += invkl::weight_w_tilde(a);
    }
    const IntPoly q_rev = invkl::reverse(invkl::q_fan_closed(n), n);
    if (w_sum != q_rev)
      return {"weights", false,
              "at n=" + std::to_string(n) + ": sum w = " + w_sum.str() +
                  ", reversed Q = " + q_rev.str()};
    const IntPoly y = invkl::y_fan_closed(n);
    if (wt_sum != y)
      return {"weights", false,
              "at n=" + std::to_string(n) + ": sum w~ = " + wt_sum.str() + ", Y = " + y.str()};
  }
  return {"weights", true, "1 <= n <= " + std::to_string(m)};
}

SuiteOutcome run_properties(int m) {
  for (int n = 1; n <= m; ++n) {
    const IntPoly p = invkl::q_fan_closed(n);
    for (const Int& c : p.coeffs())
      if (c <= 0)
        return {"properties", false,
                "at n=" + std::to_string(n) + ": nonpositive coefficient in " + p.str()};
    if (!invkl::is_log_concave_no_internal_zeros(p))
      return {"properties", false, "at n=" + std::to_string(n) + ": " + p.str() +
                                       " is not log-concave with interval support"};
    if (2 * p.degree() >= n)
      return {"properties", false,
              "at n=" + std::to_string(n) + ": degree " + std::to_string(p.degree()) +
                  " violates deg < n/2"};
    if (p.coeff(0) != invkl::pow2(static_cast<unsigned long>(n - 1)))
      return {"properties", false,
              "at n=" + std::to_string(n) + ": constant coefficient " + p.coeff(0).get_str() +
                  " != 2^(n-1)"};
  }
  return {"properties", true, "1 <= n <= " + std::to_string(m)};
}

SuiteOutcome run_sturm(int m) {
  for (int n = 1; n <= m; ++n) {
    const IntPoly b = invkl::hadamard_normalize(invkl::q_fan_closed(n));
    if (!invkl::sturm_real_rooted(b))
      return {"sturm", false,
              "at n=" + std::to_string(n) + ": " + b.str() + " is not real-rooted"};
  }
  return {"sturm", true, "1 <= n <= " + std::to_string(m)};
}

SuiteOutcome run_chromatic(int m) {
  if (m + 1 > invkl::kChromaticVertexCap)
    throw invkl::cap_error("chromatic suite: max-n must be <= " +
                           std::to_string(invkl::kChromaticVertexCap - 1) +
                           " (vertex cap " + std::to_string(invkl::kChromaticVertexCap) +
                           "), got " + std::to_string(m));
  const IntPoly t = IntPoly::monomial(Int(1), 1);
  const IntPoly t_minus_1(std::vector<Int>{Int(-1), Int(1)});
  const IntPoly t_minus_2(std::vector<Int>{Int(-2), Int(1)});
  IntPoly expected = t * t_minus_1;  // n = 1
  for (int n = 1; n <= m; ++n) {
    if (n >= 2) expected *= t_minus_2;
    const IntPoly chi = invkl::chromatic_polynomial(invkl::fan(n));
    if (chi != expected)
      return {"chromatic", false,
              "at n=" + std::to_string(n) + ": chromatic " + chi.str() + " != t(t-1)(t-2)^" +
                  std::to_string(n - 1)};
    Int mu_expected = invkl::pow2(static_cast<unsigned long>(n - 1));
    if (n % 2 == 1) mu_expected = -mu_expected;
    const Int mu = invkl::mobius_invariant(invkl::fan(n));
    if (mu != mu_expected)
      return {"chromatic", false,
              "at n=" + std::to_string(n) + ": mobius " + mu.get_str() + " != (-1)^n 2^(n-1) = " +
                  mu_expected.get_str()};
  }
  return {"chromatic", true, "1 <= n <= " + std::to_string(m)};
}

SuiteOutcome run_a_identity(int m) {
  if (invkl::a_identity_check(m)) return {"a-identity", true, "1 <= n <= " + std::to_string(m)};
  // Locate the first failing row; only reached when the check above failed.
  int first = 1;
  while (first <= m && invkl::a_identity_check(first)) ++first;
  return {"a-identity", false, "first failing row n=" + std::to_string(first)};
}

SuiteOutcome run_suite(const std::string& name, int m) {
  if (name == "q-cross") return run_q_cross(m);
  if (name == "y-cross") return run_y_cross(m);
  if (name == "weights") return run_weights(m);
  if (name == "properties") return run_properties(m);
  if (name == "sturm") return run_sturm(m);
  if (name == "chromatic") return run_chromatic(m);
  return run_a_identity(m);
}

const std::vector<std::pair<std::string, int>> kSuiteDefaults = {
    {"q-cross", 50},  {"y-cross", 30},  {"weights", 9},     {"properties", 200},
    {"sturm", 40},    {"chromatic", 12}, {"a-identity", 200},
};

int run_verify(const std::vector<std::string>& selected, int max_n_override) {
  bool all_pass = true;
  for (const auto& [name, default_max] : kSuiteDefaults) {
    if (std::find(selected.begin(), selected.end(), name) == selected.end()) continue;
    const int m = max_n_override >= 0 ? max_n_override : default_max;
    const SuiteOutcome out = run_suite(name, m);
    std::cout << out.name << ": " << (out.pass ? "pass" : "FAIL") << " (" << out.detail << ")\n";
    all_pass = all_pass && out.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact inverse Kazhdan-Lusztig (Q) and inverse Z (Y) polynomials of graphic "
      "matroids.\nHard caps: composition enumeration 11 vertices, deletion-contraction "
      "16 vertices,\nweight-structure enumeration n <= 10; oracle caps default to 7 (Q) "
      "and 6 (Y).",
      "invkl"};
  app.require_subcommand(1);
  int rc = 0;

  // --- q ---------------------------------------------------------------
  auto* cmd_q = app.add_subcommand("q", "Q polynomial of the fan matroid F_n");
  int q_n = 0, q_max_n = 0, q_oracle_cap = invkl::kQFanOracleCap;
  std::string q_method = "closed", q_format = "text";
  auto* q_opt_n = cmd_q->add_option("--n", q_n, "single index n >= 0")
                      ->check(CLI::NonNegativeNumber);
  auto* q_opt_max = cmd_q->add_option("--max-n", q_max_n, "all indices 0..max-n")
                        ->check(CLI::NonNegativeNumber);
  q_opt_n->excludes(q_opt_max);
  cmd_q->add_option("--method", q_method, "computation route (default closed)")
      ->check(CLI::IsMember({"closed", "recurrence", "catalan-gf", "deletion", "oracle"}));
  cmd_q->add_option("--format", q_format, "output format (default text)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd_q->add_option("--oracle-cap", q_oracle_cap,
                    "largest n the composition-enumeration oracle accepts (default " +
                        std::to_string(invkl::kQFanOracleCap) + ")")
      ->check(CLI::NonNegativeNumber);
  cmd_q->callback([&]() {
    if (!*q_opt_n && !*q_opt_max)
      throw std::invalid_argument("q: exactly one of --n or --max-n is required");
    const bool single = static_cast<bool>(*q_opt_n);
    const int lo = single ? q_n : 0;
    const int hi = single ? q_n : q_max_n;
    emit(q_rows(lo, hi, q_method, q_oracle_cap), q_format, single);
  });

  // --- y ---------------------------------------------------------------
  auto* cmd_y = app.add_subcommand("y", "Y polynomial of the fan matroid F_n");
  int y_n = 0, y_max_n = 0, y_oracle_cap = invkl::kYFanOracleCap;
  std::string y_method = "closed", y_format = "text";
  auto* y_opt_n = cmd_y->add_option("--n", y_n, "single index n >= 0 (b-expansion needs n >= 1)")
                      ->check(CLI::NonNegativeNumber);
  auto* y_opt_max = cmd_y->add_option("--max-n", y_max_n,
                                      "all indices 0..max-n (b-expansion starts at 1)")
                        ->check(CLI::NonNegativeNumber);
  y_opt_n->excludes(y_opt_max);
  cmd_y->add_option("--method", y_method, "computation route (default closed)")
      ->check(CLI::IsMember({"closed", "deletion", "gf", "oracle", "b-expansion"}));
  cmd_y->add_option("--format", y_format, "output format (default text)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd_y->add_option("--oracle-cap", y_oracle_cap,
                    "largest n the composition-enumeration oracle accepts (default " +
                        std::to_string(invkl::kYFanOracleCap) + ")")
      ->check(CLI::NonNegativeNumber);
  cmd_y->callback([&]() {
    if (!*y_opt_n && !*y_opt_max)
      throw std::invalid_argument("y: exactly one of --n or --max-n is required");
    const bool single = static_cast<bool>(*y_opt_n);
    int lo = single ? y_n : 0;
    const int hi = single ? y_n : y_max_n;
    if (y_method == "b-expansion") {
      if (hi < 1)
        throw std::invalid_argument("y: the b-expansion route needs n >= 1 (no b-row at n=0)");
      lo = std::max(lo, 1);
    }
    emit(y_rows(lo, hi, y_method, y_oracle_cap), y_format, single);
  });

  // --- graph -----------------------------------------------------------
  auto* cmd_graph = app.add_subcommand("graph", "invariants of a graph read from a file");
  std::string g_file, g_invariant, g_format = "text";
  int g_vertex_cap = -1;
  cmd_graph->add_option("--file", g_file, "graph file: 'vertices N' then one 'u v' edge per line")
      ->required();
  cmd_graph->add_option("--invariant", g_invariant, "which invariant to compute")
      ->required()
      ->check(CLI::IsMember({"q", "y", "chromatic", "characteristic", "mobius"}));
  cmd_graph->add_option("--vertex-cap", g_vertex_cap,
                        "override the vertex cap (defaults: " +
                            std::to_string(invkl::kCompositionVertexCap) +
                            " for q/y, " + std::to_string(invkl::kChromaticVertexCap) +
                            " for chromatic/characteristic/mobius)")
      ->check(CLI::PositiveNumber);
  cmd_graph->add_option("--format", g_format, "output format (default text)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd_graph->callback([&]() { rc = run_graph(g_file, g_invariant, g_vertex_cap, g_format); });

  // --- verify ----------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "cross-validation and property suites");
  std::vector<std::string> v_suites;
  for (const auto& [name, unused] : kSuiteDefaults) v_suites.push_back(name);
  int v_max_n = -1;
  cmd_verify
      ->add_option("--suites", v_suites,
                   "subset of suites to run, comma-separated (default: all, in the canonical "
                   "order q-cross, y-cross, weights, properties, sturm, chromatic, a-identity)")
      ->delimiter(',')
      ->check(CLI::IsMember({"q-cross", "y-cross", "weights", "properties", "sturm", "chromatic",
                             "a-identity"}));
  cmd_verify
      ->add_option("--max-n", v_max_n,
                   "range override for every selected suite (defaults: q-cross 50, y-cross 30, "
                   "weights 9, properties 200, sturm 40, chromatic 12, a-identity 200; hard caps: "
                   "weights 10, chromatic 15)")
      ->check(CLI::NonNegativeNumber);
  cmd_verify->callback([&]() { rc = run_verify(v_suites, v_max_n); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : 2;
  } catch (const invkl::cap_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const invkl::consistency_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
