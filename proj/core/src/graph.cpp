#include "invkl/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "invkl/errors.hpp"

namespace invkl {

Multigraph::Multigraph(int n_vertices, std::vector<std::pair<int, int>> edges)
    : n_(n_vertices) {
  if (n_vertices < 0) throw std::invalid_argument("Multigraph: negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("Multigraph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Multigraph: loops are not allowed");
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
}

Multigraph fan(int n) {
  if (n < 0) throw std::invalid_argument("fan: negative index");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n > 0 ? 2 * n - 1 : 0));
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);      // apex spokes
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);   // path
  return Multigraph(n + 1, std::move(edges));
}

Multigraph simplify(const Multigraph& g) {
  std::vector<std::pair<int, int>> edges = g.edges();
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Multigraph(g.n_vertices(), std::move(edges));
}

namespace {

// Minimal union-find over 0..n-1; enough for component and connectivity
// bookkeeping at these sizes.
struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // true if the two were in distinct sets
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

std::vector<std::vector<int>> connected_components(const Multigraph& g) {
  UnionFind uf(g.n_vertices());
  for (auto [u, v] : g.edges()) uf.unite(u, v);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < g.n_vertices(); ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  std::vector<std::pair<int, std::vector<int>>> keyed;
  for (auto& [root, verts] : by_root) keyed.emplace_back(verts.front(), std::move(verts));
  std::sort(keyed.begin(), keyed.end());
  for (auto& [min_v, verts] : keyed) out.push_back(std::move(verts));
  return out;
}

int rank(const Multigraph& g) {
  UnionFind uf(g.n_vertices());
  int merges = 0;
  for (auto [u, v] : g.edges())
    if (uf.unite(u, v)) ++merges;
  return merges;  // = n_vertices - number of components
}

Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& vertices) {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.n_vertices())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (!relabel.emplace(sorted[i], static_cast<int>(i)).second)
      throw std::invalid_argument("induced_subgraph: duplicate vertex");
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    auto iu = relabel.find(u), iv = relabel.find(v);
    if (iu != relabel.end() && iv != relabel.end())
      edges.emplace_back(iu->second, iv->second);
  }
  return Multigraph(static_cast<int>(sorted.size()), std::move(edges));
}

Composition::Composition(const Multigraph& g, std::vector<std::vector<int>> blocks) {
  std::vector<int> block_of(static_cast<std::size_t>(g.n_vertices()), -1);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("Composition: empty block");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 0 || v >= g.n_vertices())
        throw std::invalid_argument("Composition: vertex out of range");
      if (block_of[static_cast<std::size_t>(v)] != -1)
        throw std::invalid_argument("Composition: vertex in two blocks");
      block_of[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int v = 0; v < g.n_vertices(); ++v)
    if (block_of[static_cast<std::size_t>(v)] == -1)
      throw std::invalid_argument("Composition: vertex " + std::to_string(v) + " uncovered");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  // connectivity of each induced block
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    std::vector<int> index_of(static_cast<std::size_t>(g.n_vertices()), -1);
    for (std::size_t i = 0; i < blocks[bi].size(); ++i)
      index_of[static_cast<std::size_t>(blocks[bi][i])] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(blocks[bi].size()));
    int merges = 0;
    for (auto [u, v] : g.edges()) {
      int iu = index_of[static_cast<std::size_t>(u)], iv = index_of[static_cast<std::size_t>(v)];
      if (iu != -1 && iv != -1 && uf.unite(iu, iv)) ++merges;
    }
    if (merges != static_cast<int>(blocks[bi].size()) - 1)
      throw std::invalid_argument("Composition: block does not induce a connected subgraph");
  }
  blocks_ = std::move(blocks);
}

void for_each_composition(const Multigraph& g,
                          const std::function<void(const Composition&)>& visit,
                          int vertex_cap) {
  const int n = g.n_vertices();
  if (n > vertex_cap)
    throw cap_error("composition enumeration needs n_vertices <= " +
                    std::to_string(vertex_cap) + ", got " + std::to_string(n));
  if (n == 0) {
    visit(Composition(Composition::unchecked_tag{}, {}));
    return;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).  Block
  // ids in a RGS appear in order of their minimum element, which matches the
  // canonical block order of Composition.
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto emit = [&]() {
    const int k = 1 + *std::max_element(a.begin(), a.end());
    // one connectivity pass over the edge multiset for the whole partition
    UnionFind parts(n);
    int merges = 0;
    for (auto [u, v] : g.edges())
      if (a[static_cast<std::size_t>(u)] == a[static_cast<std::size_t>(v)] && parts.unite(u, v))
        ++merges;
    if (merges != n - k) return;  // some block is disconnected
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
    for (int v = 0; v < n; ++v) blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(v)])].push_back(v);
    visit(Composition(Composition::unchecked_tag{}, std::move(blocks)));
  };
  // iterative depth-first enumeration
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int b = 0; b <= mx + 1; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(mx, b));
    }
  };
  rec(rec, 1, 0);
}

std::vector<Composition> compositions(const Multigraph& g, int vertex_cap) {
  std::vector<Composition> out;
  for_each_composition(g, [&](const Composition& c) { out.push_back(c); }, vertex_cap);
  return out;
}

namespace {

std::vector<int> block_index_map(const Multigraph& g, const Composition& c) {
  // also re-validates that c is a partition of V(g)
  std::vector<int> block_of(static_cast<std::size_t>(g.n_vertices()), -1);
  const auto& blocks = c.blocks();
  for (std::size_t bi = 0; bi < blocks.size(); ++bi)
    for (int v : blocks[bi]) {
      if (v < 0 || v >= g.n_vertices() || block_of[static_cast<std::size_t>(v)] != -1)
        throw std::invalid_argument("composition does not fit the graph");
      block_of[static_cast<std::size_t>(v)] = static_cast<int>(bi);
    }
  for (int v = 0; v < g.n_vertices(); ++v)
    if (block_of[static_cast<std::size_t>(v)] == -1)
      throw std::invalid_argument("composition does not cover the graph");
  return block_of;
}

}  // namespace

Multigraph restrict_to(const Multigraph& g, const Composition& c) {
  const std::vector<int> block_of = block_index_map(g, c);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (block_of[static_cast<std::size_t>(u)] == block_of[static_cast<std::size_t>(v)])
      edges.emplace_back(u, v);
  return Multigraph(g.n_vertices(), std::move(edges));
}

Multigraph contract(const Multigraph& g, const Composition& c) {
  const std::vector<int> block_of = block_index_map(g, c);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    const int bu = block_of[static_cast<std::size_t>(u)], bv = block_of[static_cast<std::size_t>(v)];
    if (bu != bv) edges.emplace_back(bu, bv);
  }
  return Multigraph(c.size(), std::move(edges));
}

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

// Deletion-contraction on a simple graph, splitting into connected
// components first (each split multiplies the polynomials, which both
// shrinks the recursion and feeds the memo better keys).
IntPoly chromatic_rec(const Multigraph& g, std::map<std::vector<int>, IntPoly>& memo) {
  if (g.edges().empty()) return IntPoly::monomial(Int(1), g.n_vertices());
  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    IntPoly out = IntPoly::constant(Int(1));
    for (const auto& comp : comps) out *= chromatic_rec(induced_subgraph(g, comp), memo);
    return out;
  }
  const std::vector<int> key = graph_key(g);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const auto [u, v] = g.edges().front();
  std::vector<std::pair<int, int>> rest(g.edges().begin() + 1, g.edges().end());
  const Multigraph deleted(g.n_vertices(), std::move(rest));
  // contract u-v: merge the pair into one block, all other vertices single
  std::vector<std::vector<int>> blocks{{u, v}};
  for (int w = 0; w < g.n_vertices(); ++w)
    if (w != u && w != v) blocks.push_back({w});
  const Multigraph contracted = simplify(contract(g, Composition(g, std::move(blocks))));
  IntPoly out = chromatic_rec(deleted, memo) - chromatic_rec(contracted, memo);
  memo.emplace(key, out);
  return out;
}

}  // namespace

IntPoly chromatic_polynomial(const Multigraph& g, int vertex_cap) {
  if (g.n_vertices() > vertex_cap)
    throw cap_error("chromatic_polynomial needs n_vertices <= " + std::to_string(vertex_cap) +
                    ", got " + std::to_string(g.n_vertices()));
  std::map<std::vector<int>, IntPoly> memo;
  return chromatic_rec(simplify(g), memo);
}

IntPoly characteristic_polynomial(const Multigraph& g, int vertex_cap) {
  const IntPoly chi = chromatic_polynomial(g, vertex_cap);
  const int k = static_cast<int>(connected_components(g).size());
  // chi is divisible by t^k (one factor t per component)
  for (int i = 0; i < k; ++i)
    if (chi.coeff(i) != 0)
      throw consistency_error("characteristic_polynomial: t^components does not divide chi");
  std::vector<Int> out(chi.coeffs().begin() + k, chi.coeffs().end());
  return IntPoly(std::move(out));
}

Int mobius_invariant(const Multigraph& g, int vertex_cap) {
  return characteristic_polynomial(g, vertex_cap).coeff(0);
}

}  // namespace invkl
