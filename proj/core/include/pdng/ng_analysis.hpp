#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdng/graph.hpp"
#include "pdng/structure.hpp"

namespace pdng {

/// Hypotheses of the Nordhaus-Gaddum bound catalog, evaluated on G (and,
/// where the name says so, on its complement).
enum class HypothesisId {
  AllComponentsGe3,     ///< every component of G and of the complement has order >= 3
  BothConnected,
  DiamGGe3,             ///< includes infinite diameter
  DiamGbarGe3,
  DiamBoth2,
  KappaGLe3,
  KappaGbarLe3,
  PlanarG,
  PlanarGbar,
  NotSuperLambdaG,      ///< G connected and not super-lambda
  NotSuperLambdaGbar,
  CubicNoK33Component,  ///< G 3-regular of order >= 6 with no K_{3,3} component
  HasSmallComponents,   ///< G has an isolated vertex or a K_2 component
  NoIsolatedEither,
  TreeNotSmallStar,     ///< G a tree of order >= 4 other than K_{1,3}, K_{1,4}
};

std::span<const HypothesisId> all_hypotheses();
/// Upper-case identifier, e.g. "ALL_COMPONENTS_GE3".
std::string_view hypothesis_name(HypothesisId id);
/// Accepts the upper-case identifier or its kebab-case CLI form.
std::optional<HypothesisId> parse_hypothesis(std::string_view text);

/// Parameters to compute on G and its complement. gamma_p is always computed.
struct ParamSet {
  bool gamma = false;
  bool zero_forcing = false;
};

/// One inequality of the catalog. Checks whose hypothesis fails are reported
/// with applicable = false and holds = true.
struct TheoremCheck {
  std::string id;
  bool applicable = false;
  std::int64_t bound = 0;
  std::int64_t observed = 0;
  bool holds = true;
};

struct NGReport {
  int n = 0;
  std::string graph6;
  int p = 0;
  int p_bar = 0;
  VertexSet p_witness;
  VertexSet p_bar_witness;
  std::optional<int> g;
  std::optional<int> g_bar;
  std::optional<int> z;
  std::optional<int> z_bar;
  int sum_p = 0;
  int prod_p = 0;
  /// Isolated vertices and K_2 components of G.
  int n1 = 0;
  int n2 = 0;
  std::vector<HypothesisId> flags;
  std::vector<TheoremCheck> checks;

  bool has_flag(HypothesisId id) const;
  /// Applicable checks that fail. Any entry contradicts a published bound.
  std::vector<TheoremCheck> violations() const;
};

NGReport ng_report(const Graph& g, ParamSet params = {});

/// Flags of G from the structure of G and its complement.
std::vector<HypothesisId> hypothesis_flags(const StructureReport& g, const StructureReport& g_bar);

/// Evaluates the full bound catalog for a report whose parameter values and
/// flags are filled in.
std::vector<TheoremCheck> evaluate_checks(const NGReport& report, const StructureReport& g,
                                          const StructureReport& g_bar);

/// floor(n/3) + 2, or + 3 for the exceptional orders 13, 14, 16, 17, 20.
int sum_bound_all_components_ge3(int n);
/// ceil(n/3) + 1; std::nullopt for the orders with no claim
/// (12..18, 20, 21, 24).
std::optional<int> sum_bound_both_connected(int n);

/// {"n":..,"graph6":..,"p":..,"p_bar":..,"sum":..,"prod":..,"flags":[..],"checks":[..]}
std::string to_json_line(const NGReport& report);
std::string csv_header();
std::string to_csv_row(const NGReport& report);

struct ExtremalCriterion {
  std::string name;
  std::vector<HypothesisId> require;
  std::function<bool(const NGReport&)> accept;
  ParamSet params;
};

/// ALL_COMPONENTS_GE3 and sum_p equal to the all-components bound.
ExtremalCriterion criterion_sum_at_component_bound();
/// BOTH_CONNECTED and sum_p equal to ceil(n/3) + 1 (orders with a claim only).
ExtremalCriterion criterion_sum_at_connected_bound();
/// BOTH_CONNECTED and sum_p = floor(n/3) + 2.
ExtremalCriterion criterion_floor_sum_connected();
/// ALL_COMPONENTS_GE3 and prod_p > 2 floor(n/3).
ExtremalCriterion criterion_product_above();
/// Exact (p, p_bar) signature; either may be left open.
ExtremalCriterion criterion_signature(std::optional<int> p, std::optional<int> p_bar);
ExtremalCriterion criterion_sum_equals(int sum);
ExtremalCriterion criterion_product_equals(int prod);

using GraphSource = std::function<std::optional<Graph>()>;

/// Every graph of `source` meeting `criterion`, with its report, in input order.
std::vector<std::pair<Graph, NGReport>> find_extremal(const GraphSource& source,
                                                      const ExtremalCriterion& criterion,
                                                      int jobs = 1);

} // end of namespace pdng
