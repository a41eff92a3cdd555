#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pdng/vertex_set.hpp"

namespace pdng {

/// Raised when a graph or vertex-set argument violates a documented precondition.
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph of order 1..kMaxOrder.
///
/// Vertices are the dense indices 0..n-1 and adjacency is one bitmask per
/// vertex. The representation is canonical for a labeled graph, so equality
/// is bit-for-bit equality of the adjacency rows.
class Graph {
public:
  /// Builds a graph from an edge list. Duplicate edges collapse; loops and
  /// out-of-range endpoints are rejected.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Builds a graph from adjacency rows. Rows must describe a simple graph.
  static Graph from_rows(std::span<const Mask> rows);

  int order() const noexcept { return n_; }
  int edge_count() const noexcept;
  VertexSet vertices() const noexcept { return VertexSet::all(n_); }

  VertexSet neighbors(int v) const noexcept { return VertexSet{adj_[static_cast<std::size_t>(v)]}; }
  int degree(int v) const noexcept { return neighbors(v).size(); }
  bool adjacent(int u, int v) const noexcept { return neighbors(u).contains(v); }

  std::span<const Mask> rows() const noexcept { return {adj_.data(), static_cast<std::size_t>(n_)}; }
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const noexcept;

private:
  Graph() = default;

  int n_ = 0;
  std::array<Mask, kMaxOrder> adj_{};
};

Graph complement(const Graph& g);

/// N[S] = S together with every neighbor of a vertex of S.
VertexSet closed_neighborhood(const Graph& g, VertexSet s);
/// N(S): vertices adjacent to some member of S (may intersect S).
VertexSet open_neighborhood(const Graph& g, VertexSet s);

/// Partition of the vertex set into connected components, ordered by smallest vertex.
struct ComponentDecomposition {
  std::vector<VertexSet> parts;

  std::size_t count() const noexcept { return parts.size(); }
};

ComponentDecomposition components(const Graph& g);
/// Vertices reachable from `start` within `allowed` (start must be in allowed).
VertexSet reachable(const Graph& g, int start, VertexSet allowed);
bool is_connected(const Graph& g);

/// Induced subgraph on W, relabeled in increasing original-index order.
Graph induced_subgraph(const Graph& g, VertexSet w);

/// Disjoint union; the vertices of parts[i] follow those of parts[i-1].
Graph disjoint_union(std::span<const Graph> parts);

/// Applies a relabeling: vertex v of `g` becomes perm[v] in the result.
Graph relabel(const Graph& g, std::span<const int> perm);

/// Maps a set in an induced subgraph back to original labels (inverse of the
/// relabeling done by induced_subgraph).
VertexSet lift(VertexSet local, VertexSet w);

} // end of namespace pdng
