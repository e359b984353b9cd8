#include <gtest/gtest.h>

#include <map>
#include <random>

#include "chibound/bounded_coloring.hpp"
#include "chibound/generators.hpp"
#include "oracles.hpp"

using namespace chibound;

TEST(Budget, Values) {
  const std::vector<int> want = {0, 1, 4, 10, 6, 7, 8, 10, 11, 12, 14};
  for (int w = 0; w < static_cast<int>(want.size()); ++w) EXPECT_EQ(color_budget(w).budget, want[w]) << w;
  EXPECT_EQ(color_budget(300).budget, 400);
  EXPECT_THROW(color_budget(-1), std::invalid_argument);
}

TEST(Budget, BandArithmetic) {
  for (int w = 5; w <= 1000; ++w) EXPECT_TRUE(band_arithmetic_holds(w)) << w;
}

TEST(Hall, AssignsDistinctColoursFromPalettes) {
  const std::size_t n = 4;
  std::vector<HallCell> cells = {{VertexSet(n, {0}), {1, 2}}, {VertexSet(n, {1}), {2}}, {VertexSet(n, {2}), {1, 3}}};
  const auto got = hall_assign_component(cells);
  EXPECT_EQ(got, std::vector<int>({1, 2, 3}));
}

TEST(Hall, ViolatorReported) {
  std::vector<HallCell> cells = {{VertexSet(2, {0}), {5}}, {VertexSet(2, {1}), {5}}};
  try {
    hall_assign_component(cells);
    FAIL() << "expected HallAssignmentError";
  } catch (const HallAssignmentError& e) {
    EXPECT_EQ(e.violator.size(), 2u);
  }
}

TEST(Hall, RandomAgreesWithBruteForce) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 300; ++it) {
    const std::size_t cells_n = 1 + rng() % 6;
    std::vector<HallCell> cells;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < cells_n; ++i) {
      HallCell c{VertexSet(cells_n, {i}), {}};
      for (int x = 1; x <= 6; ++x)
        if (rng() % 3 == 0) {
          c.palette.push_back(x);
          edges.emplace_back(i, static_cast<std::size_t>(x - 1));
        }
      cells.push_back(c);
    }
    if (oracle::hall_condition(cells_n, edges)) {
      const auto got = hall_assign_component(cells);
      std::set<int> distinct(got.begin(), got.end());
      EXPECT_EQ(distinct.size(), cells_n);
      for (std::size_t i = 0; i < cells_n; ++i)
        EXPECT_NE(std::find(cells[i].palette.begin(), cells[i].palette.end(), got[i]), cells[i].palette.end());
    } else {
      EXPECT_THROW(hall_assign_component(cells), HallAssignmentError);
    }
  }
}

TEST(Color, Examples) {
  const auto gr = color_class_member(grotzsch());
  EXPECT_EQ(gr.trace.branch, Branch::small_omega_oracle);
  EXPECT_LE(gr.coloring.colors_used(), 4);
  EXPECT_TRUE(is_proper(grotzsch(), gr.coloring));

  for (std::size_t n = 0; n <= 7; ++n) {
    const Graph k = patterns::complete_graph(n);
    const auto r = color_class_member(k);
    EXPECT_EQ(r.coloring.colors_used(), static_cast<int>(n));
    EXPECT_LE(r.coloring.max_color(), color_budget(static_cast<int>(n)).budget);
  }

  const auto c5 = color_class_member(patterns::cycle_graph(5));
  EXPECT_EQ(c5.coloring.colors_used(), 3);
}

TEST(Color, ExtremalGraphsMeetTheirChromaticNumber) {
  // chi(extremal(4)) = 6, chi(extremal(5)) = 7, both equal to the budget.
  for (auto [w, chi] : {std::pair{4, 6}, std::pair{5, 7}}) {
    const Graph g = extremal(w);
    const auto r = color_class_member(g);
    EXPECT_TRUE(is_proper(g, r.coloring));
    EXPECT_LE(r.coloring.max_color(), color_budget(w).budget);
    const auto exact = chromatic_number(g);
    ASSERT_TRUE(exact.exact);
    EXPECT_EQ(exact.chi, chi);
    EXPECT_EQ(chi, color_budget(w).budget);
  }
  const Graph g6 = extremal(6);
  const auto r6 = color_class_member(g6);
  EXPECT_TRUE(is_proper(g6, r6.coloring));
  EXPECT_LE(r6.coloring.max_color(), 8);
}

TEST(Color, RejectsNonMembers) {
  GraphBuilder b(patterns::complete_graph(5));
  b.remove_edge(0, 1).remove_edge(0, 2);
  try {
    color_class_member(b.build());
    FAIL() << "expected NotClassMemberError";
  } catch (const NotClassMemberError& e) {
    EXPECT_EQ(e.witness.pattern, "HVN");
  }
}

TEST(Color, EveryBranchReachedAndWithinBudget) {
  std::map<Branch, int> seen;
  for (std::uint64_t s = 0; s < 600; ++s) {
    const Graph g = sample_planted_member(14 + s % 30, 0.05 + 0.09 * (s % 10), 10'000 + s);
    const auto r = color_class_member(g);
    ASSERT_TRUE(is_proper(g, r.coloring)) << "seed " << 10'000 + s;
    EXPECT_LE(r.coloring.max_color(), r.trace.budget);
    EXPECT_EQ(r.trace.budget, color_budget(static_cast<int>(clique_number(g).size)).budget);
    ++seen[r.trace.branch];
  }
  for (Branch b : {Branch::small_k, Branch::split_b_parts, Branch::omega_four, Branch::nonstable_cell,
                   Branch::stable_cells})
    EXPECT_GT(seen[b], 0) << branch_name(b);
  const auto small = color_class_member(sample_class_member(20, 0.3, 1));
  EXPECT_EQ(small.trace.branch, Branch::small_omega_oracle);
}

TEST(Color, OracleUpperBound) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Graph g = sample_planted_member(16 + s % 8, 0.3 + 0.05 * (s % 8), 50 + s);
    const auto r = color_class_member(g);
    const auto chi = chromatic_number(g);
    ASSERT_TRUE(chi.exact);
    EXPECT_LE(chi.chi, r.coloring.colors_used());
    EXPECT_LE(chi.chi, r.trace.budget);
  }
}

TEST(Color, TraceRecordsPalettes) {
  const auto r = color_class_member(extremal(5));
  EXPECT_EQ(r.trace.omega, 5);
  EXPECT_EQ(r.trace.k, 5);
  EXPECT_FALSE(r.trace.steps.empty());
  ASSERT_TRUE(r.decomposition);
}
