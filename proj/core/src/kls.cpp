#include "invkl/kls.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "invkl/errors.hpp"

namespace invkl {

namespace {

std::vector<int> graph_key(const Multigraph& g) {
  std::vector<int> key;
  key.reserve(1 + 2 * g.edges().size());
  key.push_back(g.n_vertices());
  for (auto [u, v] : g.edges()) {
    key.push_back(u);
    key.push_back(v);
  }
  return key;
}

const IntPoly& chromatic_cached(const Multigraph& g, KlsCache& cache) {
  const Multigraph s = simplify(g);
  const std::vector<int> key = graph_key(s);
  if (auto it = cache.chromatic.find(key); it != cache.chromatic.end()) return it->second;
  return cache.chromatic.emplace(key, chromatic_polynomial(s)).first->second;
}

}  // namespace

IntPoly q_graph(const Multigraph& g, KlsCache& cache, int vertex_cap) {
  if (g.n_vertices() > vertex_cap)
    throw cap_error("q_graph needs n_vertices <= " + std::to_string(vertex_cap) + ", got " +
                    std::to_string(g.n_vertices()));
  const Multigraph s = simplify(g);
  const std::vector<int> key = graph_key(s);
  if (auto it = cache.q.find(key); it != cache.q.end()) return it->second;

  const int rk = rank(s);
  IntPoly result;
  if (rk == 0) {
    result = IntPoly::constant(Int(1));
  } else if (const auto comps = connected_components(s); comps.size() > 1) {
    // multiplicative over direct sums
    result = IntPoly::constant(Int(1));
    for (const auto& comp : comps) result *= q_graph(induced_subgraph(s, comp), cache, vertex_cap);
  } else {
    // The defining recursion, with the single-block composition (whose term
    // is (-1)^rk Q_G because the one-vertex contraction has chi = t) moved
    // to the left-hand side:
    //   (-t)^rk Q(1/t) - (-1)^rk Q(t) = R(t),
    // where R sums (-1)^{rk G[C]} Q_{G[C]} * reverse(chi_{G/C}, |C|) over
    // the remaining compositions.  Since deg Q < rk/2, the reversed and
    // plain copies of Q occupy disjoint coefficient ranges of R.
    IntPoly r;
    for_each_composition(
        s,
        [&](const Composition& c) {
          if (c.size() == 1) return;  // the single-block term lives on the left-hand side
          const Multigraph gr = restrict_to(s, c);
          const Multigraph gc = contract(s, c);
          IntPoly term = q_graph(gr, cache, vertex_cap) * reverse(chromatic_cached(gc, cache), c.size());
          if (rank(gr) % 2 == 1) term = -term;
          r += term;
        },
        vertex_cap);
    if (!r.is_zero() && r.degree() > rk)
      throw consistency_error("q_graph: composition sum exceeds degree rank");
    const int sign = rk % 2 == 0 ? 1 : -1;
    std::vector<Int> c(static_cast<std::size_t>((rk + 1) / 2));
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = sign * r.coeff(rk - static_cast<int>(i));
    result = IntPoly(std::move(c));
    // the low half of R must re-derive the same coefficients
    for (std::size_t j = 0; j < static_cast<std::size_t>((rk + 1) / 2); ++j)
      if (r.coeff(static_cast<int>(j)) != -sign * result.coeff(static_cast<int>(j)))
        throw consistency_error("q_graph: low/high coefficient mismatch at t^" + std::to_string(j));
    if (rk % 2 == 0 && r.coeff(rk / 2) != 0)
      throw consistency_error("q_graph: middle coefficient of the composition sum is nonzero");
  }
  return cache.q.emplace(key, std::move(result)).first->second;
}

IntPoly q_graph(const Multigraph& g, int vertex_cap) {
  KlsCache cache;
  return q_graph(g, cache, vertex_cap);
}

IntPoly y_graph(const Multigraph& g, KlsCache& cache, int vertex_cap) {
  if (g.n_vertices() > vertex_cap)
    throw cap_error("y_graph needs n_vertices <= " + std::to_string(vertex_cap) + ", got " +
                    std::to_string(g.n_vertices()));
  const Multigraph s = simplify(g);
  const int rk = rank(s);
  IntPoly acc;
  for_each_composition(
      s,
      [&](const Composition& c) {
        const Multigraph gr = restrict_to(s, c);
        const Multigraph gc = contract(s, c);
        const IntPoly& chi_gc = chromatic_cached(gc, cache);
        const int gc_components = gc.n_vertices() - rank(gc);
        const Int mu = chi_gc.coeff(gc_components);  // constant term of chi/t^k
        if (mu == 0) return;
        IntPoly term = q_graph(gr, cache, vertex_cap).shifted(rank(gc)) * mu;
        if (rank(gr) % 2 == 1) term = -term;
        acc += term;
      },
      vertex_cap);
  if (rk % 2 == 1) acc = -acc;
  return acc;
}

IntPoly y_graph(const Multigraph& g, int vertex_cap) {
  KlsCache cache;
  return y_graph(g, cache, vertex_cap);
}

IntPoly q_fan_oracle(int n, int n_cap) {
  if (n < 0) throw std::invalid_argument("q_fan_oracle: negative index");
  if (n > n_cap)
    throw cap_error("q_fan_oracle needs n <= " + std::to_string(n_cap) + ", got " +
                    std::to_string(n));
  return q_graph(fan(n));
}

IntPoly y_fan_oracle(int n, int n_cap) {
  if (n < 0) throw std::invalid_argument("y_fan_oracle: negative index");
  if (n > n_cap)
    throw cap_error("y_fan_oracle needs n <= " + std::to_string(n_cap) + ", got " +
                    std::to_string(n));
  const IntPoly y = y_graph(fan(n));
  // palindromicity of degree n is a theorem for fans; enforce it here
  if (!is_palindromic(y, n))
    throw consistency_error("y_fan_oracle: result is not palindromic of degree " +
                            std::to_string(n));
  return y;
}

}  // namespace invkl
