#pragma once

#include <map>
#include <vector>

#include "invkl/graph.hpp"
#include "invkl/poly.hpp"

namespace invkl {

// Default index caps for the fan oracles: composition counts explode with
// the vertex count, and the y evaluation multiplies that by a full inner
// q recursion per composition.
inline constexpr int kQFanOracleCap = 7;
inline constexpr int kYFanOracleCap = 6;

/* Memo for the recursive solver, keyed by the exact labeled simplified
 * graph (vertex count followed by the sorted edge list).  No isomorphism
 * reduction: correctness without canonical-labeling machinery, and the
 * vertex caps keep duplicate work tolerable.  A cache is confined to one
 * computation unless the caller explicitly shares it; nothing here is
 * thread-safe by itself. */
class KlsCache {
 public:
  std::map<std::vector<int>, IntPoly> q;
  std::map<std::vector<int>, IntPoly> chromatic;
};

/* Q_G(t): the unique polynomial with deg < rank(G)/2 that satisfies the
 * defining recursion over compositions,
 *
 *   (-t)^rk Q_G(1/t) = sum_C (-1)^{rk G[C]} Q_{G[C]}(t) * t^{|C|} chi_{G/C}(1/t).
 *
 * Computation: simplify (Q is blind to parallel edges); multiply over
 * connected components; otherwise move the single-block term, which equals
 * (-1)^rk Q_G(t), to the left side and read the unknown coefficients off
 * the top of the remaining sum R(t).  The low half of R then re-determines
 * the same coefficients; any mismatch throws consistency_error. */
IntPoly q_graph(const Multigraph& g, KlsCache& cache,
                int vertex_cap = kCompositionVertexCap);
IntPoly q_graph(const Multigraph& g, int vertex_cap = kCompositionVertexCap);

/* Y_G(t), evaluated directly:
 *
 *   Y_G = (-1)^{rk G} sum_C (-1)^{rk G[C]} Q_{G[C]}(t) * t^{rk(G/C)} mu_{G/C},
 *
 * with mu the Mobius invariant of the contraction.  Palindromicity is a
 * theorem for fans only, so it is asserted by y_fan_oracle and not here. */
IntPoly y_graph(const Multigraph& g, KlsCache& cache,
                int vertex_cap = kCompositionVertexCap);
IntPoly y_graph(const Multigraph& g, int vertex_cap = kCompositionVertexCap);

// q_graph(fan(n)) / y_graph(fan(n)) with a cache shared across the whole
// recursion.  These are the independent oracles the fast fan routes are
// validated against.
IntPoly q_fan_oracle(int n, int n_cap = kQFanOracleCap);
IntPoly y_fan_oracle(int n, int n_cap = kYFanOracleCap);

}  // namespace invkl
