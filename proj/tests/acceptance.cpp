// Acceptance battery: one timed pass/fail line per criterion, exit code is
// the number of failures.  All checks are exact.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "invkl/fan.hpp"
#include "invkl/graph.hpp"
#include "invkl/kls.hpp"
#include "invkl/numeric.hpp"
#include "invkl/poly.hpp"
#include "invkl/series.hpp"

using invkl::Int;
using invkl::IntPoly;

namespace {

bool seed_values() {
  invkl::KlsCache cache;
  for (int n : {0, 1, 2})
    if (invkl::q_graph(invkl::fan(n), cache) != invkl::q_fan_closed(n)) return false;
  if (invkl::q_fan_closed(0) != IntPoly::constant(Int(1))) return false;
  if (invkl::q_fan_closed(1) != IntPoly::constant(Int(1))) return false;
  if (invkl::q_fan_closed(2) != IntPoly::constant(Int(2))) return false;
  if (invkl::y_graph(invkl::fan(0), cache) != IntPoly::constant(Int(1))) return false;
  if (invkl::y_graph(invkl::fan(1), cache) != IntPoly(std::vector<Int>{Int(1), Int(1)}))
    return false;
  return true;
}

bool q_four_way() {
  const int hi = 200;
  const auto rec = invkl::q_fan_recurrence(hi);
  const auto del = invkl::q_fan_deletion(hi);
  const auto gf = invkl::q_fan_from_gf(hi);
  for (int n = 0; n <= hi; ++n) {
    const IntPoly closed = invkl::q_fan_closed(n);
    const auto i = static_cast<std::size_t>(n);
    if (rec[i] != closed || del[i] != closed || gf[i] != closed) return false;
  }
  return true;
}

bool oracle_agreement() {
  for (int n = 0; n <= 7; ++n)
    if (invkl::q_fan_oracle(n) != invkl::q_fan_closed(n)) return false;
  for (int n = 0; n <= 6; ++n)
    if (invkl::y_fan_oracle(n) != invkl::y_fan_closed(n)) return false;
  return true;
}

bool y_three_way() {
  const int hi = 100;
  const auto del = invkl::y_fan_deletion(hi);
  const auto gf = invkl::y_fan_from_gf(hi);
  for (int n = 0; n <= hi; ++n) {
    const IntPoly closed = invkl::y_fan_closed(n);
    const auto i = static_cast<std::size_t>(n);
    if (del[i] != closed || gf[i] != closed) return false;
    if (!invkl::is_palindromic(closed, n)) return false;
    if (n >= 1 && invkl::b_expansion_reconstruct(n) != closed) return false;
  }
  return true;
}

bool weight_sums() {
  for (int n = 1; n <= 9; ++n) {
    IntPoly w_sum, wt_sum;
    for (const auto& a : invkl::cprime_structures(n)) {
      w_sum += invkl::weight_w(a);
      wt_sum += invkl::weight_w_tilde(a);
    }
    if (w_sum != invkl::reverse(invkl::q_fan_closed(n), n)) return false;
    if (wt_sum != invkl::y_fan_closed(n)) return false;
  }
  return true;
}

bool coefficient_shape() {
  for (int n = 1; n <= 500; ++n) {
    const IntPoly q = invkl::q_fan_closed(n);
    for (int i = 0; i <= q.degree(); ++i)
      if (q.coeff(i) <= 0) return false;
    if (!invkl::is_log_concave_no_internal_zeros(q)) return false;
  }
  return true;
}

bool hadamard_real_rooted() {
  for (int n = 1; n <= 40; ++n)
    if (!invkl::sturm_real_rooted(invkl::hadamard_normalize(invkl::q_fan_closed(n))))
      return false;
  return true;
}

bool chromatic_cross_check() {
  // t(t-1)(t-2)^{n-1}, built incrementally
  IntPoly expected(std::vector<Int>{Int(0), Int(-1), Int(1)});  // n = 1
  const IntPoly t_minus_2(std::vector<Int>{Int(-2), Int(1)});
  for (int n = 1; n <= 12; ++n) {
    const invkl::Multigraph f = invkl::fan(n);
    if (invkl::chromatic_polynomial(f) != expected) return false;
    Int mu = invkl::pow2(static_cast<unsigned long>(n - 1));
    if (n % 2 != 0) mu = -mu;
    if (invkl::mobius_invariant(f) != mu) return false;
    expected = expected * t_minus_2;
  }
  return true;
}

bool a_identity() { return invkl::a_identity_check(200); }

bool degree_bound() {
  for (int n = 1; n <= 500; ++n) {
    const int d = invkl::q_fan_closed(n).degree();
    if (d != (n - 1) / 2) return false;
    if (2 * d >= n) return false;
  }
  return true;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<bool()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"seed values", 1.0, seed_values},
      {"four-way Q agreement, n <= 200", 10.0, q_four_way},
      {"generic-engine oracle agreement", 120.0, oracle_agreement},
      {"three-way Y agreement + palindromicity + b-expansion, n <= 100", 30.0, y_three_way},
      {"weight-sum identities, n <= 9", 60.0, weight_sums},
      {"positive log-concave coefficients, n <= 500", 10.0, coefficient_shape},
      {"real-rootedness of the normalization, n <= 40", 60.0, hadamard_real_rooted},
      {"chromatic and Mobius cross-check, n <= 12", 10.0, chromatic_cross_check},
      {"a-identity, n <= 200", 1.0, a_identity},
      {"degree bound, n <= 500", 1.0, degree_bound},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    bool ok = false;
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.check();
    } catch (const std::exception& e) {
      ok = false;
      note = std::string(" [") + e.what() + "]";
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed.count() > c.limit_seconds) {
      ok = false;
      note += " [over time limit]";
    }
    if (!ok) ++failures;
    std::printf("criterion %2zu: %s  %-62s %7.3f s (limit %g s)%s\n", i + 1,
                ok ? "PASS" : "FAIL", c.name, elapsed.count(), c.limit_seconds, note.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures),
              criteria.size());
  return failures;
}
