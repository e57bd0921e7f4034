#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "invkl/poly.hpp"

namespace invkl {

// Hard vertex cap on composition enumeration and everything built on it:
// there are 678570 partitions of an 11-element set, which is the comfort
// limit for the recursive solver of the defining recursion.
inline constexpr int kCompositionVertexCap = 11;

// Deletion-contraction is not enumeration-backed and must reach 13 vertices
// (the fan chromatic cross-check runs to F_12), so it gets its own, larger
// cap.  Sparse graphs at this size are fast; dense ones are the caller's
// risk and the cap is overridable.
inline constexpr int kChromaticVertexCap = 16;

/* Loopless undirected multigraph on vertices 0..n-1.  Edges are stored as
 * a sorted multiset of pairs (u, v) with u < v; parallel edges are kept,
 * loops are rejected at construction.  The representation is canonical,
 * so equality is structural and an edge list doubles as a cache key. */
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int n_vertices, std::vector<std::pair<int, int>> edges);

  int n_vertices() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool operator==(const Multigraph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/* A partition of the vertex set into blocks, each inducing a connected
 * subgraph of the ambient graph -- the combinatorial face of a flat of the
 * graphic matroid.  Blocks are sorted internally and ordered by their
 * minimum element, so the representation is canonical. */
class Composition {
 public:
  // Validates: blocks cover every vertex exactly once and each induces a
  // connected subgraph of g.  Throws std::invalid_argument otherwise.
  Composition(const Multigraph& g, std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  // |C|, the number of blocks.
  int size() const { return static_cast<int>(blocks_.size()); }

  bool operator==(const Composition&) const = default;

 private:
  struct unchecked_tag {};
  Composition(unchecked_tag, std::vector<std::vector<int>> blocks)
      : blocks_(std::move(blocks)) {}

  friend void for_each_composition(const Multigraph&,
                                   const std::function<void(const Composition&)>&,
                                   int);

  std::vector<std::vector<int>> blocks_;
};

// Apex vertex 0 joined to every vertex of the path 1-2-...-n; fan(0) is the
// single vertex.
Multigraph fan(int n);

// Collapse parallel edges; same vertex set.
Multigraph simplify(const Multigraph& g);

// Vertex sets of the connected components (isolated vertices included),
// each sorted, ordered by minimum element.
std::vector<std::vector<int>> connected_components(const Multigraph& g);

// |V| minus the number of connected components.
int rank(const Multigraph& g);

// The subgraph induced by `vertices`, relabeled 0..k-1 in increasing order
// of the original labels.
Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& vertices);

// Visit every composition of g exactly once, in the order induced by
// restricted-growth-string enumeration of set partitions (connectivity
// filter applied per complete partition).  The workhorse behind both
// compositions() and the recursive solver; it avoids materializing the
// whole collection.
void for_each_composition(const Multigraph& g,
                          const std::function<void(const Composition&)>& visit,
                          int vertex_cap = kCompositionVertexCap);

// All compositions of g, materialized in enumeration order.
std::vector<Composition> compositions(const Multigraph& g,
                                      int vertex_cap = kCompositionVertexCap);

// Keeps exactly the edges internal to blocks.  The vertex set stays all of
// V(g), so rank bookkeeping needs no special-casing: rank of a restriction
// is sum(|block| - 1).
Multigraph restrict_to(const Multigraph& g, const Composition& c);

// One vertex per block (blocks ordered by minimum original label, relabeled
// 0..|C|-1), inter-block edges kept as a multiset, intra-block edges
// dropped.  Deterministic labeling makes results cacheable.
Multigraph contract(const Multigraph& g, const Composition& c);

// Chromatic polynomial of simplify(g) by deletion-contraction; monic of
// degree n_vertices.
IntPoly chromatic_polynomial(const Multigraph& g, int vertex_cap = kChromaticVertexCap);

// chromatic_polynomial(g) / t^k, k = number of connected components; the
// division is always exact.
IntPoly characteristic_polynomial(const Multigraph& g, int vertex_cap = kChromaticVertexCap);

// Constant term of the characteristic polynomial.
Int mobius_invariant(const Multigraph& g, int vertex_cap = kChromaticVertexCap);

}  // namespace invkl
