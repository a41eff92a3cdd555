#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "json.hpp"
#include "pdng/canonical.hpp"
#include "pdng/generators.hpp"
#include "pdng/graph6.hpp"
#include "pdng/ng_analysis.hpp"

using namespace pdng;

namespace {

const TheoremCheck& check(const NGReport& r, const std::string& id) {
  const auto it = std::find_if(r.checks.begin(), r.checks.end(),
                               [&](const TheoremCheck& c) { return c.id == id; });
  if (it == r.checks.end()) throw std::runtime_error("no check " + id);
  return *it;
}

GraphSource from_vector(std::vector<Graph> graphs) {
  auto data = std::make_shared<std::vector<Graph>>(std::move(graphs));
  auto pos = std::make_shared<std::size_t>(0);
  return [data, pos]() -> std::optional<Graph> {
    if (*pos >= data->size()) return std::nullopt;
    return (*data)[(*pos)++];
  };
}

} // namespace

TEST(NGReport, PathAttainsLowerBound) {
  const auto r = ng_report(path(6));
  EXPECT_EQ(r.p, 1);
  EXPECT_EQ(r.p_bar, 1);
  EXPECT_EQ(r.sum_p, 2);
  EXPECT_EQ(r.prod_p, 1);
  EXPECT_TRUE(r.violations().empty());
}

TEST(NGReport, CompleteAttainsUpperBound) {
  const auto r = ng_report(complete(5));
  EXPECT_EQ(r.p, 1);
  EXPECT_EQ(r.p_bar, 5);
  EXPECT_EQ(r.sum_p, 6);
  EXPECT_EQ(check(r, "E01.sum_upper").bound, 6);
  EXPECT_EQ(check(r, "E01.prod_upper").observed, 5);
}

TEST(NGReport, TwoTriangles) {
  const auto r = ng_report(r_k3(2));
  EXPECT_EQ(r.sum_p, 4);
  EXPECT_TRUE(r.has_flag(HypothesisId::AllComponentsGe3));
  EXPECT_EQ(check(r, "E10.sum").bound, 4);
  EXPECT_TRUE(check(r, "E10.sum").applicable);
}

TEST(NGReport, OptionalParameters) {
  const auto plain = ng_report(comb(4));
  EXPECT_FALSE(plain.g.has_value());
  EXPECT_FALSE(plain.z.has_value());
  const auto full = ng_report(comb(4), ParamSet{.gamma = true, .zero_forcing = true});
  EXPECT_EQ(full.g, 4);
  EXPECT_EQ(full.g_bar, 2);
  EXPECT_TRUE(full.z.has_value());
  EXPECT_TRUE(full.violations().empty());
}

TEST(NGReport, StarProductAndDiameter) {
  const auto r = ng_report(star(8));
  EXPECT_EQ(r.sum_p, 3);
  EXPECT_EQ(r.prod_p, 2);
  EXPECT_TRUE(r.has_flag(HypothesisId::DiamGbarGe3));
  EXPECT_TRUE(r.has_flag(HypothesisId::TreeNotSmallStar));
  const auto& tree = check(r, "E15.tree_prod_le_floor_n_over_3:G");
  EXPECT_TRUE(tree.applicable);
  EXPECT_EQ(tree.bound, 2);
  EXPECT_TRUE(tree.holds);
  EXPECT_FALSE(ng_report(star(4)).has_flag(HypothesisId::TreeNotSmallStar));
  EXPECT_FALSE(ng_report(star(5)).has_flag(HypothesisId::TreeNotSmallStar));
}

TEST(NGReport, NecklaceCubicChecksAreTight) {
  const auto r = ng_report(necklace(3));
  EXPECT_TRUE(r.has_flag(HypothesisId::CubicNoK33Component));
  EXPECT_EQ(r.p, 3);
  EXPECT_EQ(r.p_bar, 2);
  const auto& sum = check(r, "E14.cubic_sum:G");
  EXPECT_TRUE(sum.applicable);
  EXPECT_EQ(sum.bound, 5);
  EXPECT_EQ(sum.observed, 5);
  const auto& prod = check(r, "E14.cubic_prod:G");
  EXPECT_EQ(prod.bound, 6);
  EXPECT_EQ(prod.observed, 6);
  EXPECT_TRUE(r.violations().empty());
}

TEST(NGReport, K33AtComponentBound) {
  const auto r = ng_report(complete_bipartite(3, 3));
  EXPECT_EQ(r.p, 2);
  EXPECT_EQ(r.p_bar, 2);
  EXPECT_EQ(r.sum_p, 4);
  EXPECT_FALSE(r.has_flag(HypothesisId::CubicNoK33Component));
  const auto& ext = check(r, "E08.extremal_components_in_T_or_K33:G");
  EXPECT_TRUE(ext.applicable);
  EXPECT_TRUE(ext.holds);
}

TEST(NGReport, RK3Tight) {
  const auto r = ng_report(r_k3(4));
  EXPECT_EQ(r.sum_p, 6);
  EXPECT_EQ(check(r, "E10.sum").bound, 6);
  EXPECT_EQ(check(r, "E08.p_le_floor_n_over_3:G").observed, 4);
  EXPECT_TRUE(check(r, "E08.extremal_components_in_T_or_K33:G").holds);
}

TEST(NGReport, SmallComponentsExact) {
  // K1 + K2 + K3: n = 6, n1 = 1, n2 = 1; bounds (3+6+2+1)/3 = 4 and (6+2+1)/3 = 3.
  const auto r = ng_report(generate(parse_family_spec("union:complete:1+complete:2+complete:3")));
  EXPECT_EQ(r.n1, 1);
  EXPECT_EQ(r.n2, 1);
  EXPECT_EQ(r.p, 3);
  EXPECT_EQ(r.p_bar, 1);
  const auto& sum = check(r, "E12.small_components_sum:G");
  EXPECT_TRUE(sum.applicable);
  EXPECT_EQ(sum.bound, 4);
  EXPECT_EQ(sum.observed, 4);
  EXPECT_TRUE(check(r, "E12.small_components_prod:G").holds);
}

TEST(NGReport, SmallComponentStatementFailsAtOrderTwo) {
  // K2 has sum 1 + 2 = 3 against 1 + 2/3 + 1/3 = 2; the check is restricted to n >= 3.
  const auto r = ng_report(complete(2));
  EXPECT_EQ(r.sum_p, 3);
  EXPECT_EQ(r.n2, 1);
  EXPECT_FALSE(check(r, "E12.small_components_sum:G").applicable);
  const std::int64_t rhs = 3 + 2 + 2 * r.n1 + r.n2;
  EXPECT_GT(3 * r.sum_p, rhs);
}

TEST(NGReport, KappaDisjunctionIsOneCheck) {
  const auto r = ng_report(petersen());
  const auto& c = check(r, "E05.p_le_kappa_minus_1_or_pbar_le_2:G");
  EXPECT_TRUE(c.applicable);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(std::count_if(r.checks.begin(), r.checks.end(),
                          [](const TheoremCheck& x) { return x.id.starts_with("E05.") && x.id.ends_with(":G"); }),
            1);
}

TEST(NGReport, NotApplicableChecksHold) {
  for (const Graph& g : enumerate_all(6)) {
    for (const auto& c : ng_report(g).checks) {
      if (!c.applicable) EXPECT_TRUE(c.holds);
    }
  }
}

TEST(NGReport, SumAndProductInvariants) {
  for (const Graph& g : enumerate_all(5)) {
    const auto r = ng_report(g);
    EXPECT_EQ(r.sum_p, r.p + r.p_bar);
    EXPECT_EQ(r.prod_p, r.p * r.p_bar);
    EXPECT_EQ(r.graph6, emit_graph6(g));
  }
}

TEST(Bounds, ExceptionalOrders) {
  EXPECT_EQ(sum_bound_all_components_ge3(12), 6);
  EXPECT_EQ(sum_bound_all_components_ge3(13), 7);
  EXPECT_EQ(sum_bound_all_components_ge3(20), 9);
  EXPECT_EQ(sum_bound_all_components_ge3(21), 9);
  EXPECT_EQ(sum_bound_both_connected(11), 5);
  EXPECT_EQ(sum_bound_both_connected(8), 4);
  for (int n : {12, 13, 14, 15, 16, 17, 18, 20, 21, 24}) {
    EXPECT_EQ(sum_bound_both_connected(n), std::nullopt) << n;
  }
  EXPECT_EQ(sum_bound_both_connected(19), 8);
  EXPECT_EQ(sum_bound_both_connected(25), 10);
}

TEST(Hypotheses, NamesRoundTrip) {
  for (auto h : all_hypotheses()) {
    EXPECT_EQ(parse_hypothesis(hypothesis_name(h)), h);
  }
  EXPECT_EQ(parse_hypothesis("all-components-ge3"), HypothesisId::AllComponentsGe3);
  EXPECT_EQ(parse_hypothesis("both-connected"), HypothesisId::BothConnected);
  EXPECT_EQ(parse_hypothesis("nope"), std::nullopt);
}

TEST(Serialization, JsonLineSchema) {
  const auto r = ng_report(r_k3(2));
  const auto j = nlohmann::json::parse(to_json_line(r));
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["graph6"], r.graph6);
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["p_bar"], 2);
  EXPECT_EQ(j["sum"], 4);
  EXPECT_EQ(j["prod"], 4);
  EXPECT_TRUE(j["flags"].is_array());
  ASSERT_EQ(j["checks"].size(), r.checks.size());
  const auto& c = j["checks"][0];
  for (const char* key : {"id", "applicable", "bound", "observed", "holds"}) {
    EXPECT_TRUE(c.contains(key)) << key;
  }
  EXPECT_EQ(to_json_line(r).find('\n'), std::string::npos);
}

TEST(Serialization, CsvMatchesJson) {
  const auto r = ng_report(petersen(), ParamSet{.gamma = true});
  const std::string row = to_csv_row(r);
  const auto j = nlohmann::json::parse(to_json_line(r));
  const std::string header = csv_header();
  EXPECT_EQ(std::count(header.begin(), header.end(), ','),
            std::count(row.begin(), row.end(), ','));
  EXPECT_TRUE(row.starts_with("10,\"" + r.graph6 + "\"," + std::to_string(j["p"].get<int>()) +
                              "," + std::to_string(j["p_bar"].get<int>()) + "," +
                              std::to_string(j["sum"].get<int>())));
}

TEST(FindExtremal, OrderSixComponentBound) {
  const auto found = find_extremal(from_vector(enumerate_all(6)), criterion_sum_equals(4));
  std::set<std::string> certs;
  for (const auto& [g, r] : found) {
    if (r.has_flag(HypothesisId::AllComponentsGe3)) certs.insert(canonical_form(g).cert);
  }
  EXPECT_TRUE(certs.count(canonical_form(r_k3(2)).cert));
  EXPECT_TRUE(certs.count(canonical_form(complete_bipartite(3, 3)).cert));
  const auto at_bound = find_extremal(from_vector(enumerate_all(6)), criterion_sum_at_component_bound());
  EXPECT_EQ(at_bound.size(), 2U);
}

TEST(FindExtremal, OrderEightConnectedExample) {
  const auto found = find_extremal(from_vector(enumerate_all(8)), criterion_floor_sum_connected(), 3);
  EXPECT_FALSE(found.empty());
  for (const auto& [g, r] : found) {
    EXPECT_EQ(r.sum_p, 4);
    EXPECT_TRUE(r.has_flag(HypothesisId::BothConnected));
  }
  const auto same = find_extremal(from_vector(enumerate_all(8)), criterion_sum_at_connected_bound(), 1);
  EXPECT_EQ(same.size(), found.size());
}

TEST(FindExtremal, NothingAboveProductBound) {
  const auto found = find_extremal(
      from_vector(enumerate_all(5)),
      {"prod-above-n", {}, [](const NGReport& r) { return r.prod_p > r.n; }, {}});
  EXPECT_TRUE(found.empty());
  EXPECT_TRUE(find_extremal(from_vector(enumerate_all(7)), criterion_product_above()).empty());
}

TEST(FindExtremal, SignatureAndOrderIndependentOfJobs) {
  const auto one = find_extremal(from_vector(enumerate_all(7)), criterion_signature(2, std::nullopt), 1);
  const auto four = find_extremal(from_vector(enumerate_all(7)), criterion_signature(2, std::nullopt), 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].first, four[i].first);
    EXPECT_EQ(one[i].second.p, 2);
  }
  EXPECT_FALSE(find_extremal(from_vector(enumerate_all(6)), criterion_product_equals(4)).empty());
}
