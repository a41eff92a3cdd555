#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pdng/graph.hpp"

namespace pdng {

/// Exact value of a graph parameter with a minimum witness set.
struct SolveResult {
  int value = 0;
  VertexSet witness;
  std::uint64_t subsets_examined = 0;
};

/// A vertex set W (|W| >= 2) such that no vertex outside W has exactly one
/// neighbor in W. Every power dominating set meets W u N(W).
struct TwinsObstruction {
  VertexSet members;
  VertexSet required_hitting_set;
  /// True for closed twins (N[u] = N[v]), false for open twins (N(u) = N(v)).
  bool closed = false;
};

/// Observed set after the domination step N[S] and exhaustive forcing.
VertexSet pd_closure(const Graph& g, VertexSet s);
/// Same fixed point, scanning candidate forcing vertices in `scan_order` each round.
VertexSet pd_closure(const Graph& g, VertexSet s, std::span<const int> scan_order);

/// Color-change closure from blue set `b`, without a domination step.
VertexSet zf_closure(const Graph& g, VertexSet b);
VertexSet zf_closure(const Graph& g, VertexSet b, std::span<const int> scan_order);

bool is_power_dominating(const Graph& g, VertexSet s);
bool is_dominating(const Graph& g, VertexSet s);
bool is_zero_forcing(const Graph& g, VertexSet b);

struct SolveOptions {
  /// Component splitting, twin symmetry breaking and hitting-set cuts.
  /// Disabling gives the plain ascending-k search over all k-subsets.
  bool prune = true;
};

SolveResult gamma_p(const Graph& g, SolveOptions options = {});
SolveResult gamma(const Graph& g, SolveOptions options = {});
SolveResult zero_forcing(const Graph& g, SolveOptions options = {});

/// Every minimum power dominating set, in colexicographic order.
std::vector<VertexSet> all_minimum_power_dominating_sets(const Graph& g);

/// Maximal closed-twin and open-twin classes of size at least two.
std::vector<TwinsObstruction> twins_obstructions(const Graph& g);

/// Obstruction for an arbitrary W; throws GraphError if |W| < 2 or some
/// vertex outside W has exactly one neighbor in W.
TwinsObstruction make_obstruction(const Graph& g, VertexSet w);

/// True iff `s` meets the required hitting set of every obstruction.
bool hits_all(std::span<const TwinsObstruction> obstructions, VertexSet s);

} // end of namespace pdng
