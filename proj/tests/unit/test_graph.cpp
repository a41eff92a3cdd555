#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "pdng/canonical.hpp"
#include "pdng/generators.hpp"
#include "pdng/graph.hpp"

using namespace pdng;

TEST(GraphBuild, PathP3) {
  const Graph g = Graph::build(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.neighbors(1), VertexSet::single(0).with(2));
  EXPECT_EQ(g.edge_count(), 2);
}

TEST(GraphBuild, SingleVertex) {
  const Graph g = Graph::build(1, std::vector<Edge>{});
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(GraphBuild, DuplicateEdgesCollapse) {
  EXPECT_EQ(Graph::build(4, {{0, 1}, {0, 1}, {1, 0}}).edge_count(), 1);
}

TEST(GraphBuild, RejectsBadInput) {
  EXPECT_THROW(Graph::build(0, std::vector<Edge>{}), GraphError);
  EXPECT_THROW(Graph::build(63, std::vector<Edge>{}), GraphError);
  EXPECT_THROW(Graph::build(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph::build(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph::build(3, {{-1, 2}}), GraphError);
}

TEST(GraphBuild, FromRowsValidates) {
  const std::vector<Mask> asym{0b10, 0b00};
  EXPECT_THROW(Graph::from_rows(asym), GraphError);
  const std::vector<Mask> loop{0b01};
  EXPECT_THROW(Graph::from_rows(loop), GraphError);
  const std::vector<Mask> stray{0b100, 0b000};
  EXPECT_THROW(Graph::from_rows(stray), GraphError);
  const std::vector<Mask> ok{0b10, 0b01};
  EXPECT_EQ(Graph::from_rows(ok), complete(2));
}

TEST(Complement, CompleteToEdgeless) {
  EXPECT_EQ(complement(complete(4)), edgeless(4));
}

TEST(Complement, Involution) {
  EXPECT_EQ(complement(complement(path(5))), path(5));
}

TEST(Complement, TwoTrianglesGiveK33) {
  const Graph c = complement(r_k3(2));
  EXPECT_EQ(c.edge_count(), 15 - 6);
  EXPECT_TRUE(isomorphic(c, complete_bipartite(3, 3)));
}

TEST(Complement, EdgeCountsSumOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 62);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    EXPECT_EQ(g.edge_count() + complement(g).edge_count(), n * (n - 1) / 2);
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(ClosedNeighborhood, Examples) {
  EXPECT_EQ(closed_neighborhood(path(3), VertexSet::single(1)), VertexSet::all(3));
  EXPECT_TRUE(closed_neighborhood(petersen(), VertexSet{}).empty());
  // complete_bipartite(3,3): sides {0,1,2} and {3,4,5}.
  EXPECT_EQ(closed_neighborhood(complete_bipartite(3, 3), VertexSet::single(0)),
            VertexSet{0b111001});
}

TEST(ClosedNeighborhood, Monotone) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, 12, 0.25);
    const VertexSet s{rng() & full_mask(12)};
    const VertexSet t = s | VertexSet{rng() & full_mask(12)};
    EXPECT_TRUE(closed_neighborhood(g, s).subset_of(closed_neighborhood(g, t)));
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(components(r_k3(2)).count(), 2);
  EXPECT_EQ(components(path(5)).count(), 1);
  const Graph parts[] = {complete(1), complete(2), complete(3)};
  const auto d = components(disjoint_union(parts));
  ASSERT_EQ(d.count(), 3);
  EXPECT_EQ(d.parts[0].size(), 1);
  EXPECT_EQ(d.parts[1].size(), 2);
  EXPECT_EQ(d.parts[2].size(), 3);
}

TEST(Components, PartitionAndComplementConnected) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_all(n)) {
      const auto d = components(g);
      VertexSet seen;
      for (auto p : d.parts) {
        EXPECT_FALSE(p.intersects(seen));
        seen |= p;
        EXPECT_TRUE(is_connected(induced_subgraph(g, p)));
      }
      EXPECT_EQ(seen, VertexSet::all(n));
      if (d.count() >= 2) EXPECT_TRUE(is_connected(complement(g)));
    }
  }
}

TEST(InducedSubgraph, Examples) {
  EXPECT_EQ(induced_subgraph(complete(4), VertexSet{0b1011}), complete(3));
  EXPECT_EQ(induced_subgraph(path(4), VertexSet{0b0101}), edgeless(2));
  const Graph p = petersen();
  const Graph star4 = induced_subgraph(p, closed_neighborhood(p, VertexSet::single(0)));
  EXPECT_TRUE(isomorphic(star4, star(4)));
  EXPECT_THROW(induced_subgraph(p, VertexSet{}), GraphError);
}

TEST(Relabel, PreservesStructure) {
  const Graph g = path(4);
  const std::vector<int> perm{3, 2, 1, 0};
  EXPECT_EQ(relabel(g, perm), g);
  const std::vector<int> swap{1, 0, 2, 3};
  EXPECT_TRUE(relabel(g, swap).adjacent(0, 2));
  EXPECT_FALSE(relabel(g, swap).adjacent(1, 2));
}

TEST(DisjointUnion, LaysOutConsecutively) {
  const Graph parts[] = {path(2), cycle(3)};
  const Graph u = disjoint_union(parts);
  EXPECT_EQ(u.order(), 5);
  EXPECT_TRUE(u.adjacent(0, 1));
  EXPECT_TRUE(u.adjacent(2, 4));
  EXPECT_FALSE(u.adjacent(1, 2));
}
