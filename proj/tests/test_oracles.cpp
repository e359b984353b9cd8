#include <gtest/gtest.h>

#include <random>
#include <set>

#include "chibound/clique.hpp"
#include "chibound/cograph.hpp"
#include "chibound/coloring.hpp"
#include "chibound/generators.hpp"
#include "chibound/matching.hpp"
#include "oracles.hpp"

using namespace chibound;

TEST(Clique, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const Graph g = oracle::random_graph(4 + rng() % 9, 0.1 + 0.08 * (rng() % 10), rng);
    const auto r = clique_number(g);
    EXPECT_EQ(r.size, oracle::clique_number(g));
    EXPECT_EQ(r.witness.size(), r.size);
    EXPECT_TRUE(is_clique(g, r.witness));
  }
}

TEST(Clique, Within) {
  const Graph g = disjoint_union(patterns::complete_graph(3), patterns::complete_graph(4));
  EXPECT_EQ(clique_number(g).size, 4u);
  EXPECT_EQ(clique_number_in(g, VertexSet(7, {0, 1, 2, 3})).size, 3u);
  EXPECT_EQ(clique_number(Graph(0)).size, 0u);
  EXPECT_EQ(clique_number(Graph(3)).size, 1u);
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_number(patterns::cycle_graph(5)).chi, 3);
  EXPECT_EQ(chromatic_number(patterns::complete_graph(7)).chi, 7);
  EXPECT_EQ(chromatic_number(Graph(4)).chi, 1);
  EXPECT_EQ(chromatic_number(Graph(0)).chi, 0);

  const Graph gr = grotzsch();
  EXPECT_EQ(is_k_colorable(gr, 3).status, SolveStatus::not_colorable);
  const auto four = is_k_colorable(gr, 4);
  ASSERT_EQ(four.status, SolveStatus::colorable);
  ASSERT_TRUE(four.coloring);
  EXPECT_TRUE(is_proper(gr, *four.coloring));
  const auto chi = chromatic_number(gr);
  EXPECT_TRUE(chi.exact);
  EXPECT_EQ(chi.chi, 4);
  EXPECT_TRUE(chi.refuted_below);
}

TEST(Chromatic, AgreesWithBacktracking) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    const Graph g = oracle::random_graph(3 + rng() % 8, 0.15 + 0.07 * (rng() % 10), rng);
    const auto r = chromatic_number(g);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.chi, oracle::chromatic_number(g));
    EXPECT_TRUE(is_proper(g, r.coloring));
    EXPECT_EQ(r.coloring.colors_used(), r.chi);
    EXPECT_LE(static_cast<int>(r.clique.size()), r.chi);
  }
}

TEST(Chromatic, BudgetReported) {
  const auto r = is_k_colorable(mycielski(mycielski(grotzsch())), 4, 5);
  EXPECT_EQ(r.status, SolveStatus::budget_exceeded);
}

TEST(Cograph, SmallExamples) {
  GraphBuilder b(6);
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (u / 2 != v / 2) b.add_edge(u, v);
  const auto c = cograph_optimal_coloring(b.build());
  EXPECT_EQ(c.colors_used(), 3);
  EXPECT_TRUE(is_proper(b.build(), c));

  const Graph k34 = disjoint_union(patterns::complete_graph(3), patterns::complete_graph(4));
  const auto d = cograph_optimal_coloring(k34);
  EXPECT_EQ(d.colors_used(), 4);
  EXPECT_TRUE(is_proper(k34, d));

  EXPECT_THROW(cograph_optimal_coloring(patterns::path_graph(4)), NotP4FreeError);
}

TEST(Cograph, OptimalOnRandomCographs) {
  std::mt19937_64 rng(13);
  int seen = 0;
  for (int it = 0; it < 3000 && seen < 150; ++it) {
    const Graph g = oracle::random_graph(4 + rng() % 7, 0.1 + 0.08 * (rng() % 11), rng);
    if (!oracle::p4_free(g)) continue;
    ++seen;
    const auto c = cograph_optimal_coloring(g);
    EXPECT_TRUE(is_proper(g, c));
    EXPECT_EQ(c.colors_used(), oracle::chromatic_number(g));
    EXPECT_EQ(static_cast<std::size_t>(c.colors_used()), oracle::clique_number(g));
  }
  EXPECT_GE(seen, 100);
}

TEST(Cograph, Subset) {
  const Graph g = patterns::path_graph(5);
  const auto c = cograph_color_subset(g, VertexSet(5, {0, 1, 2}));
  EXPECT_EQ(c.colors_used(), 2);
  EXPECT_EQ(c.color[3], 0);
  EXPECT_EQ(c.color[4], 0);
  EXPECT_THROW(cograph_color_subset(g, VertexSet(5, {0, 1, 2, 3})), NotP4FreeError);
}

TEST(Matching, AgreesWithBruteForce) {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 300; ++it) {
    const std::size_t l = 1 + rng() % 6, r = 1 + rng() % 6;
    std::vector<BipartiteEdge> edges;
    for (std::size_t u = 0; u < l; ++u)
      for (std::size_t v = 0; v < r; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    HopcroftKarp hk(l, r, edges);
    const auto m = hk.solve();
    EXPECT_EQ(m.pairs.size(), oracle::max_matching(l, r, edges));
    const bool hall = oracle::hall_condition(l, edges);
    EXPECT_EQ(m.saturates_left, hall);
    std::vector<bool> used(r, false);
    for (auto [u, v] : m.pairs) {
      EXPECT_NE(std::find(edges.begin(), edges.end(), BipartiteEdge{u, v}), edges.end());
      EXPECT_FALSE(used[v]);
      used[v] = true;
    }
    const auto viol = hk.hall_violator();
    EXPECT_EQ(viol.has_value(), !hall);
    if (viol) {
      std::set<std::size_t> nb;
      std::set<std::size_t> s(viol->begin(), viol->end());
      for (auto [u, v] : edges)
        if (s.count(u)) nb.insert(v);
      EXPECT_LT(nb.size(), s.size());
    }
  }
}

TEST(Matching, RangeChecked) {
  EXPECT_THROW(HopcroftKarp(2, 2, {{2, 0}}), std::out_of_range);
}
