#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pdng/canonical.hpp"
#include "pdng/generators.hpp"
#include "pdng/graph6.hpp"
#include "pdng/solvers.hpp"
#include "pdng/structure.hpp"

using namespace pdng;

namespace {

VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s = s.with(v);
  return s;
}

Graph s4k3() { return parse_graph6("H?ovdX["); }

} // namespace

TEST(PdClosure, Examples) {
  EXPECT_EQ(pd_closure(path(4), set_of({0})), VertexSet::all(4));
  EXPECT_EQ(pd_closure(complete_bipartite(3, 3), set_of({0})), set_of({0, 3, 4, 5}));
  EXPECT_EQ(pd_closure(edgeless(4), set_of({0})), set_of({0}));
  EXPECT_TRUE(pd_closure(petersen(), VertexSet{}).empty());
}

TEST(IsPowerDominating, Examples) {
  EXPECT_TRUE(is_power_dominating(path(5), set_of({0})));
  EXPECT_FALSE(is_power_dominating(complete_bipartite(3, 3), set_of({0})));
  EXPECT_TRUE(is_power_dominating(petersen(), VertexSet::all(10)));
}

TEST(ZfClosure, Examples) {
  EXPECT_EQ(zf_closure(path(4), set_of({0})), VertexSet::all(4));
  EXPECT_EQ(zf_closure(complete(4), set_of({0})), set_of({0}));
  EXPECT_EQ(zf_closure(cycle(5), set_of({0, 1})), VertexSet::all(5));
  EXPECT_TRUE(zf_closure(cycle(5), VertexSet{}).empty());
}

TEST(GammaP, Examples) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(gamma_p(path(n)).value, 1);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(gamma_p(edgeless(n)).value, n);
  for (int r = 2; r <= 5; ++r) {
    EXPECT_EQ(gamma_p(complement(necklace(r))).value, 2);
    EXPECT_EQ(gamma_p(r_k3(r)).value, r);
  }
  EXPECT_EQ(gamma_p(complete(1)).value, 1);
}

TEST(Gamma, Examples) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(gamma(complete(n)).value, 1);
  for (int k = 1; k <= 9; ++k) {
    EXPECT_EQ(gamma(comb(k)).value, k);
    EXPECT_EQ(oracle::gamma(comb(k)), k);
  }
  EXPECT_EQ(gamma(s4k3()).value, 3);
  EXPECT_EQ(oracle::gamma(s4k3()), 3);
}

TEST(ZeroForcing, Examples) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(zero_forcing(path(n)).value, 1);
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(zero_forcing(complete(n)).value, n - 1);
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(zero_forcing(cycle(n)).value, 2);
    if (n <= 7) EXPECT_EQ(oracle::zero_forcing(cycle(n)), 2);
  }
  EXPECT_EQ(zero_forcing(complete(1)).value, 1);
}

TEST(Solvers, AgreeWithBruteForceUpToOrder7) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_all(n)) {
      const auto p = gamma_p(g);
      const auto d = gamma(g);
      const auto z = zero_forcing(g);
      EXPECT_EQ(p.value, oracle::gamma_p(g)) << emit_graph6(g);
      EXPECT_EQ(d.value, oracle::gamma(g)) << emit_graph6(g);
      EXPECT_EQ(z.value, oracle::zero_forcing(g)) << emit_graph6(g);
      EXPECT_EQ(p.witness.size(), p.value);
      EXPECT_EQ(d.witness.size(), d.value);
      EXPECT_EQ(z.witness.size(), z.value);
      EXPECT_TRUE(is_power_dominating(g, p.witness));
      EXPECT_TRUE(is_dominating(g, d.witness));
      EXPECT_TRUE(is_zero_forcing(g, z.witness));
      EXPECT_LE(p.value, d.value);
      EXPECT_LE(p.value, z.value);
    }
  }
}

TEST(Solvers, PrunedMatchesUnprunedOnOrder8) {
  for (const Graph& g : enumerate_all(8)) {
    EXPECT_EQ(gamma_p(g).value, gamma_p(g, {.prune = false}).value);
    EXPECT_EQ(gamma(g).value, gamma(g, {.prune = false}).value);
    EXPECT_EQ(zero_forcing(g).value, zero_forcing(g, {.prune = false}).value);
  }
}

TEST(Solvers, AdditiveOverComponents) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const Graph a = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 5), 0.5);
    const Graph b = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 4), 0.5);
    const Graph parts[] = {a, b};
    const Graph u = disjoint_union(parts);
    EXPECT_EQ(gamma_p(u).value, gamma_p(a).value + gamma_p(b).value);
    EXPECT_EQ(gamma(u).value, gamma(a).value + gamma(b).value);
    EXPECT_EQ(zero_forcing(u).value, zero_forcing(a).value + zero_forcing(b).value);
    EXPECT_EQ(gamma_p(u).value, gamma_p(u, {.prune = false}).value);
  }
}

TEST(Solvers, NoSmallerSetSucceeds) {
  const Graph g = necklace(3);
  const auto r = gamma_p(g);
  ASSERT_EQ(r.value, 3);
  for (Mask m = 0; m < (Mask{1} << 12); ++m) {
    if (std::popcount(m) == 2) EXPECT_FALSE(is_power_dominating(g, VertexSet{m}));
  }
}

TEST(Solvers, CubicBound) {
  for (int n : {6, 8}) {
    for (const Graph& g : enumerate_all(n)) {
      if (!is_regular(g, 3) || !is_connected(g) || isomorphic(g, complete_bipartite(3, 3))) continue;
      EXPECT_LE(gamma_p(g).value, n / 4);
    }
  }
  EXPECT_LE(gamma_p(petersen()).value, 2);
}

TEST(Solvers, DiameterTwoDominationBound) {
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : enumerate_all(n)) {
      if (diameter(g) != 2) continue;
      EXPECT_LE(gamma(g).value, n / 4 + 1);
      EXPECT_LE(gamma(g).value, vertex_connectivity(g));
    }
  }
}

TEST(Solvers, AllMinimumSets) {
  const auto sets = all_minimum_power_dominating_sets(path(3));
  EXPECT_EQ(sets.size(), 3U);
  const auto k33 = all_minimum_power_dominating_sets(complete_bipartite(3, 3));
  // Any two vertices; one vertex observes a side plus itself only.
  EXPECT_EQ(k33.size(), 15U);
}

TEST(TwinsObstructions, Examples) {
  const Graph t = two_leaves(path(2));
  const auto obs = twins_obstructions(t);
  bool found = false;
  for (const auto& o : obs) {
    if (o.members == set_of({1, 2})) {
      found = true;
      EXPECT_EQ(o.required_hitting_set, set_of({0, 1, 2}));
    }
  }
  EXPECT_TRUE(found);

  const auto kn = twins_obstructions(complete(5));
  ASSERT_EQ(kn.size(), 1U);
  EXPECT_EQ(kn[0].members, VertexSet::all(5));
  EXPECT_TRUE(kn[0].closed);

  EXPECT_TRUE(twins_obstructions(path(5)).empty());
}

TEST(TwinsObstructions, EveryMinimumSetHitsThem) {
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_all(n)) {
      const auto obs = twins_obstructions(g);
      for (const auto& o : obs) {
        for (int x : VertexSet::all(n) - o.members) {
          EXPECT_NE((g.neighbors(x) & o.members).size(), 1);
        }
      }
      for (VertexSet s : all_minimum_power_dominating_sets(g)) EXPECT_TRUE(hits_all(obs, s));
    }
  }
}

TEST(TwinsObstructions, ArbitraryWindow) {
  // Three leaves on one vertex.
  const Graph g = star(4);
  const auto o = make_obstruction(g, set_of({1, 2, 3}));
  EXPECT_EQ(o.required_hitting_set, VertexSet::all(4));
  EXPECT_THROW(make_obstruction(path(4), set_of({0, 1})), GraphError);
  EXPECT_THROW(make_obstruction(path(4), set_of({0})), GraphError);
}
