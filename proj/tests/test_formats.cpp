#include <gtest/gtest.h>

#include <random>

#include "chibound/formats.hpp"
#include "chibound/generators.hpp"
#include "chibound/patterns.hpp"
#include "chibound/records.hpp"
#include "oracles.hpp"

using namespace chibound;

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(write_graph6(Graph(0)), "?");
  EXPECT_EQ(read_graph6("?").order(), 0u);
  // K3: bits 111 padded to 111000 -> 56 + 63.
  EXPECT_EQ(write_graph6(patterns::complete_graph(3)), "Bw");
  EXPECT_EQ(read_graph6("Bw"), patterns::complete_graph(3));
  // 5-cycle 0-1-2-3-4, bits 101001 100100.
  EXPECT_EQ(write_graph6(patterns::cycle_graph(5)), "Dhc");
  EXPECT_EQ(read_graph6(">>graph6<<Dhc\n"), patterns::cycle_graph(5));
}

TEST(Graph6, LongForm) {
  const Graph g = extremal(6);  // 72 vertices
  const auto s = write_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(read_graph6(s), g);
  EXPECT_EQ(write_graph6(read_graph6(s)), s);
}

TEST(Graph6, Errors) {
  EXPECT_THROW(read_graph6(""), FormatError);
  EXPECT_THROW(read_graph6("D c"), FormatError);   // byte outside 63..126
  EXPECT_THROW(read_graph6("Dh"), FormatError);    // truncated
  EXPECT_THROW(read_graph6("Dhc?"), FormatError);  // trailing data
  EXPECT_THROW(read_graph6("Bx"), FormatError);    // nonzero padding
}

TEST(Dimacs, ReadWrite) {
  const Graph k2 = read_dimacs_col("p edge 2 1\ne 1 2\n");
  EXPECT_EQ(k2, patterns::complete_graph(2));
  const auto text = write_dimacs_col(patterns::cycle_graph(5));
  std::size_t e_lines = 0;
  for (std::size_t i = 0; i < text.size(); ++i)
    if ((i == 0 || text[i - 1] == '\n') && text[i] == 'e') ++e_lines;
  EXPECT_EQ(e_lines, 5u);
  EXPECT_EQ(read_dimacs_col("c hi\np col 3 3\ne 1 2\ne 2 1\ne 2 3\n"), patterns::path_graph(3));
  EXPECT_THROW(read_dimacs_col("e 1 2\n"), FormatError);
  EXPECT_THROW(read_dimacs_col("p edge 2 1\ne 1 3\n"), FormatError);
  EXPECT_THROW(read_dimacs_col("p edge 2 1\ne 1 x\n"), FormatError);
}

TEST(EdgeList, ReadWrite) {
  EXPECT_EQ(read_edge_list("n=3\n0 1\n1 2"), patterns::path_graph(3));
  try {
    read_edge_list("n=3\n0 1\n1 7\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(read_edge_list("0 1\n"), FormatError);
}

TEST(Formats, RoundTripRandom) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 300; ++it) {
    const Graph g = oracle::random_graph(rng() % 12, 0.5, rng);
    for (auto f : {GraphFormat::graph6, GraphFormat::dimacs, GraphFormat::edges}) {
      const auto text = write_graph(g, f);
      EXPECT_EQ(read_graph(text, f), g);
      EXPECT_EQ(write_graph(read_graph(text, f), f), text);
    }
  }
}

TEST(Formats, RoundTripAllSmall) {
  for (std::size_t n = 0; n <= 5; ++n)
    for_each_labeled_graph(n, [&](const Graph& g) {
      for (auto f : {GraphFormat::graph6, GraphFormat::dimacs, GraphFormat::edges})
        ASSERT_EQ(read_graph(write_graph(g, f), f), g);
    });
}

TEST(Records, ColoringShape) {
  const Graph k2 = patterns::complete_graph(2);
  Coloring c(2, 2);
  c.color = {1, 2};
  EXPECT_EQ(coloring_json(k2, c).dump(), R"({"0":1,"1":2,"colors_used":2,"proper":true})");
}

TEST(Records, WitnessShape) {
  GraphBuilder b(patterns::complete_graph(5));
  b.remove_edge(0, 1).remove_edge(0, 2);
  const Graph g = b.build();
  const auto res = is_class_member(g);
  ASSERT_TRUE(res.witness);
  const auto j = witness_json(g, *res.witness);
  EXPECT_EQ(j["pattern"], "HVN");
  EXPECT_EQ(j["vertices"].size(), 5u);
  EXPECT_TRUE(j["verified"].get<bool>());
}
