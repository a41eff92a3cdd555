#include <gtest/gtest.h>

#include "pdng/canonical.hpp"
#include "pdng/generators.hpp"
#include "pdng/graph6.hpp"
#include "pdng/solvers.hpp"
#include "pdng/structure.hpp"

using namespace pdng;

TEST(Necklace, OrderRegularConnected) {
  for (int r = 2; r <= 6; ++r) {
    const Graph g = necklace(r);
    EXPECT_EQ(g.order(), 4 * r);
    EXPECT_TRUE(is_regular(g, 3));
    EXPECT_TRUE(is_connected(g));
    EXPECT_FALSE(g.adjacent(4, 5));
    EXPECT_TRUE(g.adjacent(1, 4));
  }
  EXPECT_THROW(necklace(1), std::invalid_argument);
}

TEST(Necklace, PowerDomination) {
  for (int r = 2; r <= 5; ++r) {
    EXPECT_EQ(gamma_p(necklace(r)).value, r);
    EXPECT_EQ(gamma_p(complement(necklace(r))).value, 2);
  }
}

TEST(Comb, Shape) {
  const Graph g = comb(9);
  EXPECT_EQ(g.order(), 18);
  int leaves = 0;
  for (int v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1;
  EXPECT_EQ(leaves, 9);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(Comb, PowerDominationSums) {
  for (int s = 1; s <= 4; ++s) {
    const Graph g = comb(3 * s);
    EXPECT_EQ(gamma_p(g).value, s);
    EXPECT_EQ(gamma_p(complement(g)).value, 1);
  }
}

TEST(Comb, WitnessOnSpine) {
  const auto r = gamma_p(comb(9));
  EXPECT_EQ(r.value, 3);
  for (int v : r.witness) EXPECT_EQ(v % 2, 0);
}

TEST(RK3, Shape) {
  const Graph g = r_k3(2);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.edge_count(), 6);
  EXPECT_EQ(components(g).count(), 2);
  for (int r = 2; r <= 5; ++r) {
    EXPECT_EQ(gamma_p(r_k3(r)).value + gamma_p(complement(r_k3(r))).value, r + 2);
  }
}

TEST(TFamily, PathBaseWithoutGadgetEdges) {
  const Graph g = t_family(path(2), {false, false});
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.edge_count(), 5);
  EXPECT_EQ(gamma_p(g).value, 2);
  EXPECT_EQ(g, two_leaves(path(2)));
}

TEST(TFamily, AllBasesAndFlagPatterns) {
  for (int h = 2; h <= 4; ++h) {
    for (const Graph& base : enumerate_all(h)) {
      if (!is_connected(base)) continue;
      for (int mask = 0; mask < (1 << h); ++mask) {
        std::vector<bool> flags(static_cast<std::size_t>(h));
        for (int i = 0; i < h; ++i) flags[static_cast<std::size_t>(i)] = (mask >> i) & 1;
        const Graph g = t_family(base, flags);
        EXPECT_EQ(g.order(), 3 * h);
        EXPECT_EQ(gamma_p(g).value, h);
        EXPECT_TRUE(is_connected(complement(g)));
        EXPECT_EQ(gamma_p(complement(g)).value, 1);
        const auto d = t_family_decomposition(g);
        ASSERT_TRUE(d.has_value());
        EXPECT_EQ(d->triples.size(), static_cast<std::size_t>(h));
        EXPECT_TRUE(is_in_t_family(relabel(g, canonical_labeling(g))));
      }
    }
  }
}

TEST(TFamily, RejectsDisconnectedBase) {
  EXPECT_THROW(t_family(edgeless(2), {false, false}), std::invalid_argument);
  EXPECT_THROW(t_family(path(3), {false}), std::invalid_argument);
}

TEST(TFamily, Recognizer) {
  EXPECT_TRUE(is_in_t_family(two_leaves(path(3))));
  EXPECT_FALSE(is_in_t_family(complete_bipartite(3, 3)));
  EXPECT_FALSE(is_in_t_family(cycle(9)));
  EXPECT_TRUE(is_in_t_family(path(3)));
  EXPECT_TRUE(is_in_t_family(complete(3)));
  EXPECT_FALSE(is_in_t_family(path(4)));
}

TEST(Petersen, Shape) {
  const Graph g = petersen();
  EXPECT_EQ(g.order(), 10);
  EXPECT_EQ(g.edge_count(), 15);
  EXPECT_TRUE(is_regular(g, 3));
  EXPECT_EQ(diameter(g), 2);
}

TEST(Basic, StandardFamilies) {
  EXPECT_EQ(complete_bipartite(3, 3).edge_count(), 9);
  EXPECT_EQ(degree_stats(star(6)).min_degree, 1);
  EXPECT_EQ(degree_stats(star(6)).max_degree, 5);
  EXPECT_EQ(cycle(7).edge_count(), 7);
  EXPECT_EQ(path(1).order(), 1);
  EXPECT_THROW(path(0), std::invalid_argument);
  EXPECT_THROW(complete_bipartite(0, 3), std::invalid_argument);
  EXPECT_THROW(cycle(2), std::invalid_argument);
}

TEST(FamilySpec, ParsesTextForms) {
  EXPECT_EQ(generate(parse_family_spec("necklace:3")), necklace(3));
  EXPECT_EQ(generate(parse_family_spec("comb:9")), comb(9));
  EXPECT_EQ(generate(parse_family_spec("rk3:4")), r_k3(4));
  EXPECT_EQ(generate(parse_family_spec("kpq:2:3")), complete_bipartite(2, 3));
  EXPECT_EQ(generate(parse_family_spec("petersen")), petersen());
  EXPECT_EQ(generate(parse_family_spec("tfamily:path:3:edges=000")),
            t_family(path(3), {false, false, false}));
  EXPECT_EQ(generate(parse_family_spec("tfamily:cycle:3:edges=101")),
            t_family(cycle(3), {true, false, true}));
  EXPECT_EQ(generate(parse_family_spec("twoleaves:path:4")), two_leaves(path(4)));
  EXPECT_EQ(generate(parse_family_spec("twoleaves:g6=A_")), two_leaves(path(2)));
  const Graph parts[] = {complete(1), complete(2), complete(3)};
  EXPECT_EQ(generate(parse_family_spec("union:complete:1+complete:2+complete:3")),
            disjoint_union(parts));
}

TEST(FamilySpec, RejectsBadSpecs) {
  for (const char* bad : {"", "necklace", "necklace:1", "necklace:x", "cube:3", "path:0",
                          "tfamily:path:3:edges=01", "tfamily:edgeless:2", "kpq:3", "g6=??"}) {
    EXPECT_THROW(generate(parse_family_spec(bad)), std::invalid_argument) << bad;
  }
}
