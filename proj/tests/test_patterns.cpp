#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "chibound/cograph.hpp"
#include "chibound/generators.hpp"
#include "chibound/patterns.hpp"
#include "oracles.hpp"

using namespace chibound;

namespace {

Graph hvn_instance() {
  GraphBuilder b(patterns::complete_graph(5));
  b.remove_edge(0, 1).remove_edge(0, 2);
  return b.build();
}

std::vector<Pattern> all_patterns() {
  return {patterns::p2_union_p4(), patterns::hvn(),         patterns::p4(), patterns::p2_union_p3(),
          patterns::diamond(),     patterns::complete(4),   patterns::c5()};
}

}  // namespace

TEST(Templates, HvnShape) {
  const Graph h = patterns::hvn_graph();
  EXPECT_EQ(h.order(), 5u);
  EXPECT_EQ(h.edge_count(), 8u);
  std::vector<std::size_t> deg;
  for (Vertex v = 0; v < 5; ++v) deg.push_back(h.degree(v));
  std::sort(deg.rbegin(), deg.rend());
  EXPECT_EQ(deg, std::vector<std::size_t>({4, 4, 3, 3, 2}));
}

TEST(Templates, Names) {
  for (const auto& p : all_patterns()) EXPECT_EQ(patterns::by_name(p.name).templ, p.templ);
  EXPECT_THROW(patterns::by_name("nope"), std::invalid_argument);
}

TEST(FindInduced, Examples) {
  const auto w = find_induced(hvn_instance(), patterns::hvn());
  ASSERT_TRUE(w);
  auto sorted = w->vertices;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, std::vector<Vertex>({0, 1, 2, 3, 4}));

  const auto p4 = find_induced(patterns::cycle_graph(5), patterns::p4());
  ASSERT_TRUE(p4);
  EXPECT_TRUE(verify_witness(patterns::cycle_graph(5), patterns::p4(), *p4));

  EXPECT_FALSE(find_induced(grotzsch(), patterns::hvn()));

  const Graph g = disjoint_union(patterns::path_graph(2), patterns::path_graph(4));
  const auto pp = find_induced(g, patterns::p2_union_p4());
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->vertices.size(), 6u);
  EXPECT_TRUE(verify_witness(g, patterns::p2_union_p4(), *pp));
}

TEST(FindInduced, TooSmallGraphIsFree) {
  EXPECT_FALSE(find_induced(patterns::complete_graph(3), patterns::hvn()));
  EXPECT_FALSE(find_induced(Graph(0), patterns::p4()));
}

TEST(FindInduced, TemplateGuard) {
  const Pattern big{PatternKind::complete, "K7", patterns::complete_graph(7)};
  EXPECT_THROW(find_induced(patterns::complete_graph(8), big), std::invalid_argument);
}

// Completeness and the lex-least tie-break against subset enumeration.
TEST(FindInduced, AgreesWithBruteForce) {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 150; ++it) {
    const std::size_t n = 5 + rng() % 3;
    const double p = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(n, p, rng);
    for (const auto& pat : all_patterns()) {
      const auto want = oracle::least_induced_copy(g, pat.templ);
      const auto got = find_induced(g, pat);
      ASSERT_EQ(got.has_value(), want.has_value()) << pat.name << " on " << n << " vertices";
      if (got) {
        EXPECT_EQ(got->vertices, *want) << pat.name;
        EXPECT_TRUE(verify_witness(g, pat, *got));
      }
      const auto any = find_any_induced(g, pat);
      ASSERT_EQ(any.has_value(), want.has_value());
      if (any) {
        EXPECT_TRUE(verify_witness(g, pat, *any));
      }
    }
  }
}

TEST(Membership, Examples) {
  EXPECT_TRUE(is_class_member(extremal(4)).member);
  const auto res = is_class_member(hvn_instance());
  EXPECT_FALSE(res.member);
  ASSERT_TRUE(res.witness);
  EXPECT_EQ(res.witness->pattern, "HVN");
  EXPECT_TRUE(is_class_member(patterns::cycle_graph(5)).member);
  EXPECT_FALSE(oracle::contains_induced(patterns::cycle_graph(5), patterns::hvn_graph()));
}

TEST(Membership, FrozenLabelledCounts) {
  // Oracle-derived labelled member counts.
  const std::vector<std::size_t> expected = {1, 1, 2, 8, 64, 994, 28733};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    std::size_t count = 0;
    enumerate_class_members(n, false, [&](const Graph&) { ++count; });
    EXPECT_EQ(count, expected[n]) << "n = " << n;
  }
}

TEST(Membership, Hereditary) {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 40; ++it) {
    const Graph g = sample_planted_member(16 + rng() % 10, 0.5, rng());
    ASSERT_TRUE(is_class_member(g).member);
    for (int s = 0; s < 10; ++s) {
      VertexSet keep(g.order());
      for (Vertex v = 0; v < g.order(); ++v)
        if (rng() % 3) keep.insert(v);
      EXPECT_TRUE(is_class_member(induced_subgraph(g, keep)).member);
    }
  }
}

TEST(Membership, TriangleFreeIsHvnFree) {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 200; ++it) {
    const Graph g = oracle::random_graph(6 + rng() % 10, 0.3, rng);
    if (find_any_induced(g, patterns::complete(3))) continue;
    EXPECT_FALSE(detect_hvn(g));
  }
}

TEST(P4Free, Examples) {
  GraphBuilder b(6);  // K(2,2,2)
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (u / 2 != v / 2) b.add_edge(u, v);
  EXPECT_TRUE(is_p4_free(b.build()));
  EXPECT_FALSE(is_p4_free(patterns::path_graph(4)));
}

TEST(P4Free, DetectorCographAndBruteForceAgree) {
  std::mt19937_64 rng(10);
  for (int it = 0; it < 300; ++it) {
    const Graph g = oracle::random_graph(8, 0.15 + 0.7 * static_cast<double>(rng() % 10) / 10.0, rng);
    const bool want = oracle::p4_free(g);
    EXPECT_EQ(is_p4_free(g), want);
    EXPECT_EQ(is_cograph(g), want);
  }
}

TEST(MatchingP4, SingleCrossEdge) {
  // x = {x1, x2} = {0, 1}, y = {y1, y2, y3} = {2, 3, 4}, one cross edge x1 y1.
  GraphBuilder b(5);
  b.add_edge(0, 1).add_edge(2, 3).add_edge(2, 4).add_edge(3, 4).add_edge(0, 2);
  const Graph g = b.build();
  const auto w = matching_p4_check(g, VertexSet(5, {0, 1}), VertexSet(5, {2, 3, 4}));
  EXPECT_EQ(w.vertices, std::vector<Vertex>({1, 0, 2, 4}));
  EXPECT_TRUE(verify_witness(g, patterns::p4(), w));
}

TEST(MatchingP4, PerfectMatchingOfTriangles) {
  GraphBuilder b(6);
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = u + 1; v < 3; ++v) b.add_edge(u, v).add_edge(u + 3, v + 3);
  for (Vertex u = 0; u < 3; ++u) b.add_edge(u, u + 3);
  const Graph g = b.build();
  const auto w = matching_p4_check(g, VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5}));
  EXPECT_TRUE(verify_witness(g, patterns::p4(), w));
  EXPECT_TRUE(oracle::contains_induced(g, patterns::path_graph(4)));
}

TEST(MatchingP4, Preconditions) {
  auto reason = [](auto&& f) {
    try {
      f();
    } catch (const MatchingP4PreconditionError& e) {
      return e.reason();
    }
    return MatchingP4Failure::overlapping;  // unreachable in these cases
  };
  GraphBuilder b(5);
  b.add_edge(0, 1).add_edge(2, 3).add_edge(2, 4).add_edge(3, 4);
  const Graph none = b.build();
  EXPECT_EQ(reason([&] { matching_p4_check(none, VertexSet(5, {0, 1}), VertexSet(5, {2, 3, 4})); }),
            MatchingP4Failure::empty_matching);
  b.add_edge(0, 2).add_edge(0, 3);
  EXPECT_EQ(reason([&] { matching_p4_check(b.build(), VertexSet(5, {0, 1}), VertexSet(5, {2, 3, 4})); }),
            MatchingP4Failure::not_matching);
  EXPECT_EQ(reason([&] { matching_p4_check(patterns::path_graph(5), VertexSet(5, {0, 1}), VertexSet(5, {2, 3, 4})); }),
            MatchingP4Failure::not_cliques);
  EXPECT_EQ(reason([&] {
              matching_p4_check(patterns::complete_graph(4), VertexSet(4, {0, 1}), VertexSet(4, {2, 3}));
            }),
            MatchingP4Failure::sizes);
  EXPECT_EQ(reason([&] { matching_p4_check(none, VertexSet(5, {0, 1}), VertexSet(5, {1, 2, 3})); }),
            MatchingP4Failure::overlapping);
}
