#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "invkl/errors.hpp"
#include "invkl/graph.hpp"
#include "invkl/kls.hpp"
#include "invkl/poly.hpp"

#include "frozen_values.hpp"

using frozen::ip;
using invkl::IntPoly;
using invkl::Multigraph;

TEST_CASE("q_graph on the smallest instances") {
  CHECK(invkl::q_graph(Multigraph(2, {{0, 1}})) == ip({1}));      // single edge
  CHECK(invkl::q_graph(invkl::fan(2)) == ip({2}));                // triangle
  CHECK(invkl::q_graph(invkl::fan(4)) == ip({8, 4}));
  CHECK(invkl::q_graph(Multigraph(1, {})) == ip({1}));            // rank 0
  CHECK(invkl::q_graph(Multigraph(3, {{0, 1}, {1, 2}})) == ip({1}));  // tree
}

TEST_CASE("q_graph is blind to parallel edges") {
  CHECK(invkl::q_graph(Multigraph(2, {{0, 1}, {0, 1}, {0, 1}})) ==
        invkl::q_graph(Multigraph(2, {{0, 1}})));
  CHECK(invkl::q_graph(Multigraph(3, {{0, 1}, {0, 1}, {0, 2}, {1, 2}})) ==
        invkl::q_graph(invkl::fan(2)));
}

TEST_CASE("q_graph is multiplicative over connected components") {
  // two disjoint edges: product of two rank-1 factors, each 1
  CHECK(invkl::q_graph(Multigraph(4, {{0, 1}, {2, 3}})) == ip({1}));
  // triangle plus disjoint triangle: Q = 2*2
  const Multigraph two_triangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(invkl::q_graph(two_triangles) == ip({4}));
  // fan(4) plus an isolated vertex
  const Multigraph padded(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(invkl::q_graph(padded) == ip({8, 4}));
}

TEST_CASE("q_graph respects the defining degree bound") {
  const std::vector<Multigraph> graphs = {
      invkl::fan(3), invkl::fan(5), invkl::fan(6),
      Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),  // K4
      Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),                  // 4-cycle
  };
  for (const auto& g : graphs) {
    const IntPoly q = invkl::q_graph(g);
    CHECK(2 * q.degree() < invkl::rank(g));
  }
}

TEST_CASE("the fan Q oracle reproduces the frozen closed-form table") {
  const auto expected = frozen::q_fans();
  for (int n = 0; n <= 7; ++n) CHECK(invkl::q_fan_oracle(n) == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("y_graph on the smallest instances") {
  CHECK(invkl::y_graph(invkl::fan(0)) == ip({1}));
  CHECK(invkl::y_graph(invkl::fan(1)) == ip({1, 1}));
  CHECK(invkl::y_graph(invkl::fan(2)) == ip({2, 3, 2}));
}

TEST_CASE("the fan Y oracle reproduces the frozen closed-form table") {
  const auto expected = frozen::y_fans();
  for (int n = 0; n <= 6; ++n) CHECK(invkl::y_fan_oracle(n) == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("oracle caps are enforced and overridable") {
  CHECK_THROWS_AS(invkl::q_fan_oracle(8), invkl::cap_error);
  CHECK_THROWS_AS(invkl::y_fan_oracle(7), invkl::cap_error);
  CHECK_THROWS_AS(invkl::q_fan_oracle(-1), std::invalid_argument);
  // raising the cap works while the vertex cap still holds underneath
  CHECK(invkl::q_fan_oracle(8, 8) == frozen::q_fans()[8]);
  // fan(11) has 12 vertices: the composition vertex cap refuses it
  CHECK_THROWS_AS(invkl::q_fan_oracle(11, 11), invkl::cap_error);
}

TEST_CASE("a shared cache returns consistent results") {
  invkl::KlsCache cache;
  const IntPoly first = invkl::q_graph(invkl::fan(5), cache);
  const IntPoly second = invkl::q_graph(invkl::fan(5), cache);
  CHECK(first == second);
  CHECK(first == frozen::q_fans()[5]);
  CHECK(!cache.q.empty());
  // the cache from Q work feeds the Y evaluation too
  CHECK(invkl::y_graph(invkl::fan(4), cache) == frozen::y_fans()[4]);
}

TEST_CASE("vertex cap on the generic engine") {
  CHECK_THROWS_AS(invkl::q_graph(Multigraph(12, {})), invkl::cap_error);
  CHECK_THROWS_AS(invkl::y_graph(Multigraph(12, {})), invkl::cap_error);
}

TEST_CASE("non-fan graphs against independently computed values") {
  const Multigraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const Multigraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(invkl::q_graph(k4) == ip({6, 1}));
  CHECK(invkl::q_graph(c4) == ip({3, 2}));
  const IntPoly y_k4 = invkl::y_graph(k4);
  const IntPoly y_c4 = invkl::y_graph(c4);
  CHECK(y_k4 == ip({6, 12, 12, 6}));
  CHECK(y_c4 == ip({3, 8, 8, 3}));
  // both happen to be palindromic of degree rank = 3
  CHECK(invkl::is_palindromic(y_k4, invkl::rank(k4)));
  CHECK(invkl::is_palindromic(y_c4, invkl::rank(c4)));
}
