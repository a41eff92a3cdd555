#include "pdng/ng_analysis.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"

#include "pdng/canonical.hpp"
#include "pdng/generators.hpp"
#include "pdng/graph6.hpp"
#include "pdng/parallel.hpp"
#include "pdng/solvers.hpp"

namespace pdng {

namespace {

constexpr std::array kHypotheses = {
    HypothesisId::AllComponentsGe3, HypothesisId::BothConnected,   HypothesisId::DiamGGe3,
    HypothesisId::DiamGbarGe3,      HypothesisId::DiamBoth2,       HypothesisId::KappaGLe3,
    HypothesisId::KappaGbarLe3,     HypothesisId::PlanarG,         HypothesisId::PlanarGbar,
    HypothesisId::NotSuperLambdaG,  HypothesisId::NotSuperLambdaGbar,
    HypothesisId::CubicNoK33Component, HypothesisId::HasSmallComponents,
    HypothesisId::NoIsolatedEither, HypothesisId::TreeNotSmallStar,
};

constexpr std::array<std::string_view, kHypotheses.size()> kNames = {
    "ALL_COMPONENTS_GE3", "BOTH_CONNECTED",   "DIAM_G_GE3",
    "DIAM_GBAR_GE3",      "DIAM_BOTH_2",      "KAPPA_G_LE3",
    "KAPPA_GBAR_LE3",     "PLANAR_G",         "PLANAR_GBAR",
    "NOT_SUPER_LAMBDA_G", "NOT_SUPER_LAMBDA_GBAR",
    "CUBIC_NO_K33_COMPONENT", "HAS_SMALL_COMPONENTS",
    "NO_ISOLATED_EITHER", "TREE_NOT_SMALL_STAR",
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a / b; }
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

bool all_components_ge3(const StructureReport& s) {
  const auto& orders = s.component_orders();
  return std::all_of(orders.begin(), orders.end(), [](int k) { return k >= 3; });
}

bool diam_ge3(const StructureReport& s) {
  const auto d = s.diameter();
  return !d || *d >= 3;
}

bool diam_is_2(const StructureReport& s) {
  const auto d = s.diameter();
  return d && *d == 2;
}

bool not_super_lambda(const StructureReport& s) {
  const auto sl = s.super_lambda();
  return sl && !*sl;
}

bool has_isolated(const StructureReport& s) {
  return s.min_degree() == 0;
}

std::pair<int, int> small_components(const StructureReport& s) {
  int n1 = 0;
  int n2 = 0;
  for (int k : s.component_orders()) {
    n1 += k == 1;
    n2 += k == 2;
  }
  return {n1, n2};
}

bool is_k33(const Graph& c) {
  // Order 6, 3-regular, triangle-free.
  if (c.order() != 6 || !is_regular(c, 3)) return false;
  for (int v = 0; v < 6; ++v) {
    for (int u : c.neighbors(v)) {
      if (c.neighbors(u).intersects(c.neighbors(v))) return false;
    }
  }
  return true;
}

bool cubic_no_k33(const StructureReport& s) {
  const Graph& g = s.graph();
  if (g.order() < 6 || s.regular_of() != 3) return false;
  for (auto part : s.components().parts) {
    if (is_k33(induced_subgraph(g, part))) return false;
  }
  return true;
}

bool tree_not_small_star(const StructureReport& s) {
  const Graph& g = s.graph();
  const int n = g.order();
  if (n < 4 || !s.connected() || g.edge_count() != n - 1) return false;
  const bool star = s.max_degree() == n - 1;
  return !(star && (n == 4 || n == 5));
}

/// Components of G (all of order >= 3) outside the family T u {K_{3,3}}.
int components_outside_extremal_family(const StructureReport& s) {
  int bad = 0;
  for (auto part : s.components().parts) {
    const Graph c = induced_subgraph(s.graph(), part);
    if (!is_k33(c) && !is_in_t_family(c)) ++bad;
  }
  return bad;
}

class CheckList {
public:
  void upper(std::string id, bool applicable, std::int64_t bound, std::int64_t observed) {
    add(std::move(id), applicable, bound, observed, observed <= bound);
  }
  void lower(std::string id, bool applicable, std::int64_t bound, std::int64_t observed) {
    add(std::move(id), applicable, bound, observed, observed >= bound);
  }
  void add(std::string id, bool applicable, std::int64_t bound, std::int64_t observed, bool ok) {
    out_.push_back({std::move(id), applicable, bound, observed, !applicable || ok});
  }
  std::vector<TheoremCheck> take() { return std::move(out_); }

private:
  std::vector<TheoremCheck> out_;
};

/// One orientation of the single-graph theorems: `self` plays G.
struct Side {
  const StructureReport& self;
  const StructureReport& other;
  int p;
  int p_other;
  std::optional<int> g;
  std::optional<int> g_other;
  std::optional<int> z;
  const char* tag;
};

void single_graph_checks(CheckList& c, const Side& s, int n) {
  auto id = [&](const char* base) { return std::string(base) + s.tag; };
  const bool no_isolated_either = !has_isolated(s.self) && !has_isolated(s.other);
  const int delta = s.self.min_degree();

  c.upper(id("E02.p_le_floor_n_over_pbar"), true, floor_div(n, s.p_other), s.p);

  c.upper(id("E03.pbar_le_delta"), no_isolated_either, delta, s.p_other);
  c.upper(id("E03.delta1_pbar_eq_1"), no_isolated_either && delta == 1, 1, s.p_other);

  const bool far = diam_ge3(s.self);
  c.upper(id("E04.diam3_pbar_le_2"), far, 2, s.p_other);
  if (s.g_other) c.upper(id("E04.diam3_gammabar_le_2"), far, 2, *s.g_other);

  const bool d2 = diam_is_2(s.self);
  const bool kappa_case = d2 && !has_isolated(s.other);
  const int kappa = s.self.kappa();
  c.add(id("E05.p_le_kappa_minus_1_or_pbar_le_2"), kappa_case, kappa - 1, s.p,
        s.p <= kappa - 1 || s.p_other <= 2);

  c.upper(id("E06.planar_diam2_p_le_2"), d2 && s.self.planar(), 2, s.p);
  c.upper(id("E07.not_super_lambda_p_le_2"), d2 && not_super_lambda(s.self), 2, s.p);

  const bool comps3 = all_components_ge3(s.self);
  c.upper(id("E08.p_le_floor_n_over_3"), comps3, floor_div(n, 3), s.p);
  const bool extremal = comps3 && 3 * s.p == n;
  c.upper(id("E08.extremal_components_in_T_or_K33"), extremal, 0,
          extremal ? components_outside_extremal_family(s.self) : 0);

  const auto [n1, n2] = small_components(s.self);
  // The published proof needs a third vertex to force the K_2 partner; at
  // n = 2 the statement fails (G = K_2: sum 3 against bound 2).
  const bool small = (n1 > 0 || n2 > 0) && n >= 3;
  const std::int64_t sum3 = 3 + n + 2 * n1 + n2;
  const std::int64_t prod3 = n + 2 * n1 + n2;
  const int sum = s.p + s.p_other;
  const int prod = s.p * s.p_other;
  c.add(id("E12.small_components_sum"), small, floor_div(sum3, 3), sum, 3 * sum <= sum3);
  c.add(id("E12.small_components_prod"), small, floor_div(prod3, 3), prod, 3 * prod <= prod3);

  const bool cubic = cubic_no_k33(s.self);
  const std::int64_t q4 = floor_div(n, 4);
  c.upper(id("E14.cubic_p_le_floor_n_over_4"), cubic, q4, s.p);
  c.upper(id("E14.cubic_pbar_le_2"), cubic, 2, s.p_other);
  c.upper(id("E14.cubic_sum"), cubic, q4 + 2, sum);
  c.upper(id("E14.cubic_prod"), cubic, 2 * q4, prod);

  c.upper(id("E15.tree_prod_le_floor_n_over_3"), tree_not_small_star(s.self), floor_div(n, 3), prod);

  if (s.g) {
    c.upper(id("E16.gamma_p_le_gamma"), true, *s.g, s.p);
    c.upper(id("E16.diam2_gamma_le_kappa"), d2, kappa, *s.g);
    const std::int64_t domn4 = n >= 24 ? q4 : q4 + 1;
    c.upper(id("E16.diam2_gamma_le_n_over_4"), d2, domn4, *s.g);
    c.upper(id("E16.gammabar_le_delta_plus_1"), true, delta + 1, *s.g_other);
    // Planar diameter-2 graphs other than S_4(K_3) (order 9, gamma 3) have gamma <= 2.
    c.add(id("E16.planar_diam2_gamma"), d2 && s.self.planar(), 2, *s.g,
          *s.g <= 2 || (n == 9 && *s.g == 3));
  }
  if (s.z) {
    c.upper(id("E17.gamma_p_le_z"), true, *s.z, s.p);
  }

  c.add(id("S01.kappa_le_lambda_le_delta"), true, delta, s.self.lambda(),
        kappa <= s.self.lambda() && s.self.lambda() <= delta);
  c.add(id("S02.disconnected_complement_connected"), !s.self.connected(), 1,
        static_cast<std::int64_t>(s.other.component_orders().size()), s.other.connected());
}

} // namespace

std::span<const HypothesisId> all_hypotheses() { return kHypotheses; }

std::string_view hypothesis_name(HypothesisId id) {
  return kNames[static_cast<std::size_t>(id)];
}

std::optional<HypothesisId> parse_hypothesis(std::string_view text) {
  std::string upper;
  for (char ch : text) {
    upper += ch == '-' ? '_' : static_cast<char>(ch >= 'a' && ch <= 'z' ? ch - 'a' + 'A' : ch);
  }
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == upper) return kHypotheses[i];
  }
  return std::nullopt;
}

bool NGReport::has_flag(HypothesisId id) const {
  return std::find(flags.begin(), flags.end(), id) != flags.end();
}

std::vector<TheoremCheck> NGReport::violations() const {
  std::vector<TheoremCheck> out;
  for (const auto& c : checks) {
    if (c.applicable && !c.holds) out.push_back(c);
  }
  return out;
}

int sum_bound_all_components_ge3(int n) {
  constexpr std::array exceptional = {13, 14, 16, 17, 20};
  const bool exc = std::find(exceptional.begin(), exceptional.end(), n) != exceptional.end();
  return n / 3 + (exc ? 3 : 2);
}

std::optional<int> sum_bound_both_connected(int n) {
  constexpr std::array no_claim = {12, 13, 14, 15, 16, 17, 18, 20, 21, 24};
  if (std::find(no_claim.begin(), no_claim.end(), n) != no_claim.end()) return std::nullopt;
  return static_cast<int>(ceil_div(n, 3)) + 1;
}

std::vector<HypothesisId> hypothesis_flags(const StructureReport& g, const StructureReport& g_bar) {
  using H = HypothesisId;
  std::vector<H> flags;
  auto set = [&](H id, bool on) {
    if (on) flags.push_back(id);
  };
  const auto [n1, n2] = small_components(g);
  set(H::AllComponentsGe3, all_components_ge3(g) && all_components_ge3(g_bar));
  set(H::BothConnected, g.connected() && g_bar.connected());
  set(H::DiamGGe3, diam_ge3(g));
  set(H::DiamGbarGe3, diam_ge3(g_bar));
  set(H::DiamBoth2, diam_is_2(g) && diam_is_2(g_bar));
  set(H::KappaGLe3, g.kappa() <= 3);
  set(H::KappaGbarLe3, g_bar.kappa() <= 3);
  set(H::PlanarG, g.planar());
  set(H::PlanarGbar, g_bar.planar());
  set(H::NotSuperLambdaG, not_super_lambda(g));
  set(H::NotSuperLambdaGbar, not_super_lambda(g_bar));
  set(H::CubicNoK33Component, cubic_no_k33(g));
  set(H::HasSmallComponents, n1 > 0 || n2 > 0);
  set(H::NoIsolatedEither, !has_isolated(g) && !has_isolated(g_bar));
  set(H::TreeNotSmallStar, tree_not_small_star(g));
  return flags;
}

std::vector<TheoremCheck> evaluate_checks(const NGReport& r, const StructureReport& sg,
                                          const StructureReport& sgbar) {
  using H = HypothesisId;
  CheckList c;
  const int n = r.n;
  const int sum = r.sum_p;
  const int prod = r.prod_p;
  const std::int64_t q3 = n / 3;
  const std::int64_t q4 = n / 4;

  c.lower("E01.sum_lower", true, 2, sum);
  c.upper("E01.sum_upper", true, n + 1, sum);
  c.lower("E01.prod_lower", true, 1, prod);
  c.upper("E01.prod_upper", true, n, prod);

  const bool comps3 = r.has_flag(H::AllComponentsGe3);
  const bool cond1 = r.has_flag(H::DiamGGe3) || r.has_flag(H::DiamGbarGe3);
  const bool cond2 = r.has_flag(H::PlanarG) || r.has_flag(H::PlanarGbar);
  const bool cond3 = r.has_flag(H::KappaGLe3) || r.has_flag(H::KappaGbarLe3);
  const bool cond4 = r.has_flag(H::NotSuperLambdaG) || r.has_flag(H::NotSuperLambdaGbar);
  const bool e9 = comps3 && (cond1 || cond2 || cond3 || cond4);
  c.upper("E09.min_p_le_2", e9, 2, std::min(r.p, r.p_bar));
  c.upper("E09.sum", e9, q3 + 2, sum);
  c.upper("E09.prod", e9, 2 * q3, prod);

  c.upper("E10.sum", comps3, sum_bound_all_components_ge3(n), sum);

  const auto b11 = sum_bound_both_connected(n);
  const bool e11 = r.has_flag(H::BothConnected) && b11.has_value();
  c.upper("E11.sum", e11, b11.value_or(0), sum);

  const bool e13 = r.has_flag(H::DiamBoth2) && (cond2 || cond3 || cond4);
  c.upper("E13.sum", e13, n >= 24 ? q4 + 2 : q4 + 3, sum);
  c.upper("E13.prod", e13, n >= 24 ? 2 * q4 : 2 * q4 + 2, prod);

  if (r.g && r.g_bar) {
    const int gs = *r.g + *r.g_bar;
    const int gp = *r.g * *r.g_bar;
    c.lower("E16.sum_lower", n >= 2, 3, gs);
    c.upper("E16.sum_upper", n >= 2, n + 1, gs);
    c.lower("E16.prod_lower", n >= 2, 2, gp);
    c.upper("E16.prod_upper", n >= 2, n, gp);
    const bool min_deg1 = sg.min_degree() >= 1 && sgbar.min_degree() >= 1;
    c.upper("E16.min_degree_1_sum", min_deg1, n / 2 + 2, gs);
    const bool min_deg7 = sg.min_degree() >= 7 && sgbar.min_degree() >= 7;
    c.upper("E16.min_degree_7_sum", min_deg7, q3 + 2, gs);
  }
  if (r.z && r.z_bar) {
    const std::int64_t zs = *r.z + *r.z_bar;
    const std::int64_t zp = std::int64_t{*r.z} * *r.z_bar;
    const std::int64_t nn = n;
    c.lower("E17.sum_lower", n >= 2, nn - 2, zs);
    c.upper("E17.sum_upper", n >= 2, 2 * nn - 1, zs);
    c.lower("E17.prod_lower", n >= 2, nn - 3, zp);
    c.upper("E17.prod_upper", n >= 2, nn * nn - nn, zp);
  }

  single_graph_checks(c, Side{sg, sgbar, r.p, r.p_bar, r.g, r.g_bar, r.z, ":G"}, n);
  single_graph_checks(c, Side{sgbar, sg, r.p_bar, r.p, r.g_bar, r.g, r.z_bar, ":Gbar"}, n);
  return c.take();
}

NGReport ng_report(const Graph& g, ParamSet params) {
  const Graph gbar = complement(g);
  const StructureReport sg(g);
  const StructureReport sgbar(gbar);

  NGReport r;
  r.n = g.order();
  r.graph6 = emit_graph6(g);
  const auto pg = gamma_p(g);
  const auto pgbar = gamma_p(gbar);
  r.p = pg.value;
  r.p_bar = pgbar.value;
  r.p_witness = pg.witness;
  r.p_bar_witness = pgbar.witness;
  r.sum_p = r.p + r.p_bar;
  r.prod_p = r.p * r.p_bar;
  if (params.gamma) {
    r.g = gamma(g).value;
    r.g_bar = gamma(gbar).value;
  }
  if (params.zero_forcing) {
    r.z = zero_forcing(g).value;
    r.z_bar = zero_forcing(gbar).value;
  }
  std::tie(r.n1, r.n2) = small_components(sg);
  r.flags = hypothesis_flags(sg, sgbar);
  r.checks = evaluate_checks(r, sg, sgbar);
  return r;
}

std::string to_json_line(const NGReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["graph6"] = r.graph6;
  j["p"] = r.p;
  j["p_bar"] = r.p_bar;
  j["sum"] = r.sum_p;
  j["prod"] = r.prod_p;
  if (r.g) j["g"] = *r.g;
  if (r.g_bar) j["g_bar"] = *r.g_bar;
  if (r.z) j["z"] = *r.z;
  if (r.z_bar) j["z_bar"] = *r.z_bar;
  auto flags = nlohmann::ordered_json::array();
  for (auto f : r.flags) flags.push_back(hypothesis_name(f));
  j["flags"] = std::move(flags);
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json item;
    item["id"] = c.id;
    item["applicable"] = c.applicable;
    item["bound"] = c.bound;
    item["observed"] = c.observed;
    item["holds"] = c.holds;
    checks.push_back(std::move(item));
  }
  j["checks"] = std::move(checks);
  return j.dump();
}

std::string csv_header() {
  return "n,graph6,p,p_bar,sum,prod,g,g_bar,z,z_bar,flags,applicable_checks,violations";
}

std::string to_csv_row(const NGReport& r) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string{}; };
  std::string flags;
  for (auto f : r.flags) {
    if (!flags.empty()) flags += ';';
    flags += hypothesis_name(f);
  }
  const auto applicable = std::count_if(r.checks.begin(), r.checks.end(),
                                        [](const TheoremCheck& c) { return c.applicable; });
  // graph6 may contain '"' but never ',' or newlines; quote it for CSV.
  std::string g6 = "\"";
  for (char ch : r.graph6) {
    g6 += ch;
    if (ch == '"') g6 += '"';
  }
  g6 += '"';
  return std::to_string(r.n) + ',' + g6 + ',' + std::to_string(r.p) + ',' +
         std::to_string(r.p_bar) + ',' + std::to_string(r.sum_p) + ',' + std::to_string(r.prod_p) +
         ',' + opt(r.g) + ',' + opt(r.g_bar) + ',' + opt(r.z) + ',' + opt(r.z_bar) + ',' + flags +
         ',' + std::to_string(applicable) + ',' + std::to_string(r.violations().size());
}

ExtremalCriterion criterion_sum_at_component_bound() {
  return {"sum-at-component-bound",
          {HypothesisId::AllComponentsGe3},
          [](const NGReport& r) { return r.sum_p == sum_bound_all_components_ge3(r.n); },
          {}};
}

ExtremalCriterion criterion_sum_at_connected_bound() {
  return {"sum-at-connected-bound",
          {HypothesisId::BothConnected},
          [](const NGReport& r) {
            const auto b = sum_bound_both_connected(r.n);
            return b && r.sum_p == *b;
          },
          {}};
}

ExtremalCriterion criterion_floor_sum_connected() {
  return {"floor-sum-connected",
          {HypothesisId::BothConnected},
          [](const NGReport& r) { return r.sum_p == r.n / 3 + 2; },
          {}};
}

ExtremalCriterion criterion_product_above() {
  return {"product-above",
          {HypothesisId::AllComponentsGe3},
          [](const NGReport& r) { return r.prod_p > 2 * (r.n / 3); },
          {}};
}

ExtremalCriterion criterion_signature(std::optional<int> p, std::optional<int> p_bar) {
  return {"signature",
          {},
          [p, p_bar](const NGReport& r) {
            return (!p || r.p == *p) && (!p_bar || r.p_bar == *p_bar);
          },
          {}};
}

ExtremalCriterion criterion_sum_equals(int sum) {
  return {"sum", {}, [sum](const NGReport& r) { return r.sum_p == sum; }, {}};
}

ExtremalCriterion criterion_product_equals(int prod) {
  return {"prod", {}, [prod](const NGReport& r) { return r.prod_p == prod; }, {}};
}

std::vector<std::pair<Graph, NGReport>> find_extremal(const GraphSource& source,
                                                      const ExtremalCriterion& criterion,
                                                      int jobs) {
  std::vector<std::pair<Graph, NGReport>> out;
  ordered_parallel_map<Graph, NGReport>(
      source, 256, jobs, [&](const Graph& g) { return ng_report(g, criterion.params); },
      [&](const Graph& g, NGReport&& r) {
        const bool flags_ok = std::all_of(criterion.require.begin(), criterion.require.end(),
                                          [&](HypothesisId h) { return r.has_flag(h); });
        if (flags_ok && criterion.accept(r)) out.emplace_back(g, std::move(r));
        return true;
      });
  return out;
}

} // end of namespace pdng
