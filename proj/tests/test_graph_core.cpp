#include <gtest/gtest.h>

#include <random>

#include "chibound/graph.hpp"
#include "chibound/patterns.hpp"
#include "oracles.hpp"

using namespace chibound;

TEST(VertexSet, BasicAlgebra) {
  VertexSet a(130, {1, 64, 129});
  VertexSet b(130, {64, 65});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ((a & b).to_vector(), std::vector<Vertex>({64}));
  EXPECT_EQ((a | b).size(), 4u);
  EXPECT_EQ((a - b).to_vector(), std::vector<Vertex>({1, 129}));
  EXPECT_EQ(a.complement().size(), 127u);
  EXPECT_EQ(a.first(), 1u);
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(VertexSet(130, {2}).is_subset_of(a));
  std::vector<Vertex> it(a.begin(), a.end());
  EXPECT_EQ(it, a.to_vector());
  EXPECT_THROW(a.insert(130), std::out_of_range);
  EXPECT_THROW((void)(a & VertexSet(5)), std::invalid_argument);
}

TEST(Graph, InducedSubgraph) {
  const Graph c5 = patterns::cycle_graph(5);
  EXPECT_EQ(induced_subgraph(c5, c5.vertices()), c5);
  const Graph k3 = induced_subgraph(patterns::complete_graph(5), VertexSet(5, {0, 1, 2}));
  EXPECT_EQ(k3, patterns::complete_graph(3));
  // P4 0-1-2-3 restricted to {0,2,3}: relabelled 0,1,2 with the single edge (1,2).
  const Graph s = induced_subgraph(patterns::path_graph(4), VertexSet(4, {0, 2, 3}));
  EXPECT_EQ(s.order(), 3u);
  EXPECT_EQ(s.edges(), std::vector<Edge>({{1, 2}}));
  EXPECT_THROW(induced_subgraph(c5, VertexSet(6, {5})), std::out_of_range);
}

TEST(Graph, Complement) {
  EXPECT_EQ(complement(patterns::complete_graph(4)).edge_count(), 0u);
  const Graph c5 = patterns::cycle_graph(5);
  EXPECT_EQ(complement(complement(c5)), c5);
  EXPECT_TRUE(oracle::isomorphic(complement(c5), c5));
}

TEST(Graph, DisjointUnion) {
  const Graph p2p4 = disjoint_union(patterns::path_graph(2), patterns::path_graph(4));
  EXPECT_EQ(p2p4.order(), 6u);
  EXPECT_EQ(p2p4.edges(), std::vector<Edge>({{0, 1}, {2, 3}, {3, 4}, {4, 5}}));
  const Graph g = patterns::cycle_graph(5);
  EXPECT_EQ(disjoint_union(Graph(0), g), g);
  const Graph two_k2 = disjoint_union(patterns::complete_graph(2), patterns::complete_graph(2));
  EXPECT_EQ(two_k2.order(), 4u);
  EXPECT_EQ(two_k2.edge_count(), 2u);
}

TEST(Graph, Neighbourhoods) {
  GraphBuilder b(4);
  b.add_edge(0, 1).add_edge(0, 2).add_edge(0, 3);
  const Graph star = b.build();
  EXPECT_EQ(neighbors(star, 0).to_vector(), std::vector<Vertex>({1, 2, 3}));
  const Graph c5 = patterns::cycle_graph(5);
  EXPECT_EQ(neighbors_in(c5, 0, VertexSet(5, {1, 2})).to_vector(), std::vector<Vertex>({1}));
  EXPECT_TRUE(neighbors(Graph(3), 1).empty());
  EXPECT_THROW(neighbors(c5, 5), std::out_of_range);
}

TEST(Graph, CompleteAndAnticomplete) {
  const Graph k4 = patterns::complete_graph(4);
  EXPECT_TRUE(is_complete_between(k4, VertexSet(4, {0, 1}), VertexSet(4, {2, 3})));
  const Graph two_k2 = disjoint_union(patterns::complete_graph(2), patterns::complete_graph(2));
  EXPECT_TRUE(is_anticomplete_between(two_k2, VertexSet(4, {0, 1}), VertexSet(4, {2, 3})));
  const Graph p3 = patterns::path_graph(3);
  EXPECT_TRUE(is_anticomplete_between(p3, VertexSet(3, {0}), VertexSet(3, {2})));
  EXPECT_FALSE(is_complete_between(p3, VertexSet(3, {0}), VertexSet(3, {2})));
  EXPECT_THROW(is_complete_between(p3, VertexSet(3, {0, 1}), VertexSet(3, {1})), std::invalid_argument);
}

TEST(Graph, BuilderRejectsLoops) {
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(b.add_edge(0, 3), std::out_of_range);
}

TEST(GraphProperties, RandomInvariants) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 20;
    const Graph g = oracle::random_graph(n, 0.4, rng);
    const Graph h = oracle::random_graph(1 + rng() % 10, 0.5, rng);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(induced_subgraph(g, g.vertices()), g);
    EXPECT_EQ(disjoint_union(g, h).edge_count(), g.edge_count() + h.edge_count());
    for (Vertex v = 0; v < n; ++v) {
      EXPECT_FALSE(g.adjacent(v, v));
      for (Vertex u = 0; u < n; ++u) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
    // Split into two random disjoint halves.
    VertexSet x(n), y(n);
    for (Vertex v = 0; v < n; ++v) {
      const auto r = rng() % 3;
      if (r == 0) x.insert(v);
      if (r == 1) y.insert(v);
    }
    if (!x.empty() && !y.empty() && is_complete_between(g, x, y)) {
      EXPECT_FALSE(is_anticomplete_between(g, x, y));
    }
    std::size_t cross = 0;
    for (Vertex u : x)
      for (Vertex v : y) cross += g.adjacent(u, v) ? 1 : 0;
    EXPECT_EQ(is_complete_between(g, x, y), cross == x.size() * y.size());
    EXPECT_EQ(is_anticomplete_between(g, x, y), cross == 0);
  }
}

TEST(GraphProperties, ComponentsPartitionTheSet) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 1 + rng() % 25;
    const Graph g = oracle::random_graph(n, 0.1, rng);
    const auto comps = components(g, g.vertices());
    VertexSet all(n);
    for (const auto& c : comps) {
      EXPECT_FALSE(all.intersects(c));
      all |= c;
      for (const auto& d : comps)
        if (!(c == d)) {
          EXPECT_TRUE(is_anticomplete_between(g, c, d));
        }
    }
    EXPECT_EQ(all, g.vertices());
  }
}
