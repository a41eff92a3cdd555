#pragma once

#include <optional>
#include <vector>

#include "pdng/graph.hpp"

namespace pdng {

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
};

DegreeStats degree_stats(const Graph& g);

/// Largest BFS eccentricity; std::nullopt stands for an infinite diameter
/// (the graph is disconnected).
std::optional<int> diameter(const Graph& g);

/// Vertex connectivity. Zero for disconnected graphs, n-1 for K_n, otherwise
/// the minimum over non-adjacent pairs of the number of internally disjoint
/// paths (unit-capacity max-flow on the vertex-split network).
int vertex_connectivity(const Graph& g);

/// Edge connectivity. Zero for disconnected graphs and for K_1.
int edge_connectivity(const Graph& g);

/// True iff lambda == delta and every minimum edge-cut isolates one vertex.
/// Uses the clique characterization on diameter-2 graphs and the definitional
/// min-cut search otherwise. Throws GraphError on a disconnected graph.
bool is_super_lambda(const Graph& g);

/// Clique characterization for connected diameter-2 graphs: not super-lambda
/// iff some delta-clique has every vertex of degree delta. For delta == 1 the
/// only candidate cut isolates a leaf, so the graph is super-lambda.
bool super_lambda_by_cliques(const Graph& g);

/// Definitional check: lambda == delta and no edge-cut of size lambda leaves
/// two or more vertices on both sides.
bool super_lambda_by_cuts(const Graph& g);

/// Kuratowski planarity: no subdivision of K_5 or K_{3,3}.
///
/// The input is first reduced (vertices of degree <= 1 deleted, degree-2
/// vertices smoothed), then branch vertices are enumerated and joined by
/// backtracking over internally disjoint paths. Worst case is exponential;
/// intended for orders up to about 16.
bool is_planar(const Graph& g);

bool is_regular(const Graph& g, int r);
std::optional<int> regular_degree(const Graph& g);

/// Lazily computed, cached structural metrics of one graph.
///
/// Each accessor computes its value on first use. Instances are not
/// synchronized; give each thread its own report.
class StructureReport {
public:
  explicit StructureReport(Graph g) : graph_(std::move(g)) {}

  const Graph& graph() const noexcept { return graph_; }

  int min_degree() const;
  int max_degree() const;
  /// std::nullopt means infinite.
  std::optional<int> diameter() const;
  int kappa() const;
  int lambda() const;
  /// std::nullopt on disconnected graphs, where super-lambda is undefined.
  std::optional<bool> super_lambda() const;
  bool planar() const;
  std::optional<int> regular_of() const;
  /// Orders of the components, in component order.
  const std::vector<int>& component_orders() const;
  const ComponentDecomposition& components() const;
  bool connected() const { return component_orders().size() == 1; }

private:
  Graph graph_;
  mutable std::optional<DegreeStats> degrees_;
  mutable std::optional<std::optional<int>> diameter_;
  mutable std::optional<int> kappa_;
  mutable std::optional<int> lambda_;
  mutable std::optional<std::optional<bool>> super_lambda_;
  mutable std::optional<bool> planar_;
  mutable std::optional<ComponentDecomposition> components_;
  mutable std::optional<std::vector<int>> component_orders_;
};

} // end of namespace pdng
