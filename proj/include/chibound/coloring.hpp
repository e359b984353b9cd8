#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "chibound/clique.hpp"
#include "chibound/graph.hpp"

namespace chibound {

/// Vertex -> colour map. Colours are 1..palette_size; 0 marks an uncoloured vertex.
struct Coloring {
  std::vector<int> color;
  int palette_size = 0;

  Coloring() = default;
  Coloring(std::size_t n, int palette) : color(n, 0), palette_size(palette) {}

  std::size_t order() const { return color.size(); }

  int colors_used() const {
    std::set<int> distinct;
    for (int c : color)
      if (c > 0) distinct.insert(c);
    return static_cast<int>(distinct.size());
  }

  int max_color() const {
    int m = 0;
    for (int c : color) m = std::max(m, c);
    return m;
  }
};

/// Every vertex coloured from 1..palette_size and no edge monochromatic.
inline bool is_proper(const Graph& g, const Coloring& c) {
  if (c.order() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (c.color[v] < 1 || c.color[v] > c.palette_size) return false;
  for (auto [u, v] : g.edges())
    if (c.color[u] == c.color[v]) return false;
  return true;
}

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

enum class SolveStatus { colorable, not_colorable, budget_exceeded };

struct KColorResult {
  SolveStatus status = SolveStatus::not_colorable;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

namespace detail {

/// DSATUR backtracking over at most k colours. New colours are introduced in order,
/// which fixes the first vertex to colour 1 and removes colour-permutation symmetry.
class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, int k, std::uint64_t budget)
      : g_(g), n_(g.order()), k_(k), budget_(budget), color_(n_, 0), sat_(n_, 0),
        seen_(n_ * static_cast<std::size_t>(k + 1), 0), degree_(n_) {
    for (Vertex v = 0; v < n_; ++v) degree_[v] = g.degree(v);
  }

  SolveStatus run() {
    if (n_ == 0) return SolveStatus::colorable;
    if (k_ <= 0) return SolveStatus::not_colorable;
    const auto s = search(0, 0);
    return s;
  }

  std::uint64_t nodes() const { return nodes_; }

  Coloring coloring() const {
    Coloring c(n_, k_);
    for (Vertex v = 0; v < n_; ++v) c.color[v] = color_[v];
    return c;
  }

 private:
  int& seen(Vertex v, int c) { return seen_[v * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(c)]; }

  Vertex select() const {
    Vertex best = kNoVertex;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != 0) continue;
      if (best == kNoVertex || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && degree_[v] > degree_[best]))
        best = v;
    }
    return best;
  }

  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex u : g_.neighbors(v))
      if (seen(u, c)++ == 0) ++sat_[u];
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    color_[v] = 0;
    for (Vertex u : g_.neighbors(v))
      if (--seen(u, c) == 0) --sat_[u];
  }

  SolveStatus search(std::size_t done, int used) {
    if (done == n_) return SolveStatus::colorable;
    const Vertex v = select();
    if (sat_[v] >= k_) return SolveStatus::not_colorable;
    const int top = std::min(used + 1, k_);
    for (int c = 1; c <= top; ++c) {
      if (seen(v, c) != 0) continue;
      if (++nodes_ > budget_) return SolveStatus::budget_exceeded;
      assign(v, c);
      const auto s = search(done + 1, std::max(used, c));
      if (s != SolveStatus::not_colorable) return s;
      unassign(v);
    }
    return SolveStatus::not_colorable;
  }

  const Graph& g_;
  std::size_t n_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> color_;
  std::vector<int> sat_;
  std::vector<int> seen_;
  std::vector<std::size_t> degree_;
};

}  // namespace detail

/// Exact k-colourability by DSATUR backtracking, bounded by a node budget.
inline KColorResult is_k_colorable(const Graph& g, int k, std::uint64_t node_budget = kDefaultNodeBudget) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  KColorResult r;
  if (g.order() == 0) {
    r.status = SolveStatus::colorable;
    r.coloring = Coloring(0, k);
    return r;
  }
  detail::DsaturSearch s(g, k, node_budget);
  r.status = s.run();
  r.nodes = s.nodes();
  if (r.status == SolveStatus::colorable) r.coloring = s.coloring();
  return r;
}

/// Greedy DSATUR colouring (no backtracking).
inline Coloring dsatur_greedy(const Graph& g) {
  const int k = static_cast<int>(std::max<std::size_t>(g.order(), 1));
  detail::DsaturSearch s(g, k, ~std::uint64_t{0});
  s.run();
  Coloring c = s.coloring();
  c.palette_size = c.max_color();
  return c;
}

struct ChromaticResult {
  bool exact = false;        // false when the node budget ran out
  int chi = 0;               // exact value, or the best upper bound found
  int lower_bound = 0;       // refuted / clique bound; equals chi when exact
  Coloring coloring;         // uses chi colours
  VertexSet clique;          // certifies the clique lower bound
  bool refuted_below = false;  // chi-1 colours refuted by search rather than by the clique
  std::uint64_t nodes = 0;
};

/// Exact chromatic number: from the clique bound up to the greedy bound, one
/// k-colourability test per value, sharing a single node budget.
inline ChromaticResult chromatic_number(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget) {
  ChromaticResult r;
  if (g.order() == 0) {
    r.exact = true;
    r.clique = VertexSet(0);
    return r;
  }
  const auto cl = clique_number(g);
  r.clique = cl.witness;
  const int lb = static_cast<int>(cl.size);
  Coloring greedy = dsatur_greedy(g);
  const int ub = greedy.palette_size;
  r.lower_bound = lb;
  for (int k = lb; k < ub; ++k) {
    const std::uint64_t left = node_budget > r.nodes ? node_budget - r.nodes : 0;
    auto kr = is_k_colorable(g, k, left);
    r.nodes += kr.nodes;
    if (kr.status == SolveStatus::colorable) {
      r.exact = true;
      r.chi = k;
      r.refuted_below = k > lb;
      r.coloring = *kr.coloring;
      r.coloring.palette_size = k;
      return r;
    }
    if (kr.status == SolveStatus::budget_exceeded) {
      r.exact = false;
      r.chi = ub;
      r.coloring = greedy;
      return r;
    }
    r.lower_bound = k + 1;
  }
  r.exact = true;
  r.chi = ub;
  r.lower_bound = ub;
  r.refuted_below = ub > lb;
  r.coloring = greedy;
  return r;
}

}  // namespace chibound
