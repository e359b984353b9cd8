#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chibound/clique.hpp"
#include "chibound/cograph.hpp"
#include "chibound/coloring.hpp"
#include "chibound/decomposition.hpp"
#include "chibound/graph.hpp"
#include "chibound/matching.hpp"
#include "chibound/patterns.hpp"

namespace chibound {

struct ColorBudget {
  int omega = 0;
  int budget = 0;
};

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// 0 -> 0, 1 -> 1, 2 -> 4, 3 -> 10, otherwise ceil(4w/3).
inline ColorBudget color_budget(int omega) {
  if (omega < 0) throw std::invalid_argument("negative clique number");
  int b = 0;
  if (omega <= 1)
    b = omega;
  else if (omega == 2)
    b = 4;
  else if (omega == 3)
    b = 10;
  else
    b = ceil_div(4 * omega, 3);
  return {omega, b};
}

/// Colours requested by the middle band for w >= 5 against what the low band offers.
inline bool band_arithmetic_holds(int omega) {
  const int q = ceil_div(omega, 3);
  return 2 * (omega - q - (q + 1) + 1) <= omega - q;
}

enum class Branch { none, small_omega_oracle, small_k, split_b_parts, omega_four, nonstable_cell, stable_cells };

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::none: return "none";
    case Branch::small_omega_oracle: return "small-omega-oracle";
    case Branch::small_k: return "small-k";
    case Branch::split_b_parts: return "split-b-parts";
    case Branch::omega_four: return "omega-4";
    case Branch::nonstable_cell: return "nonstable-cell";
    case Branch::stable_cells: return "stable-cells";
  }
  return "?";
}

struct TraceStep {
  std::string target;
  std::vector<int> palette;  // colours allowed
  std::vector<int> used;     // colours actually placed
};

struct HallRecord {
  std::vector<std::string> cells;
  std::vector<int> colors;
};

struct BranchTrace {
  Branch branch = Branch::none;
  int omega = 0;
  int k = -1;
  int budget = 0;
  std::vector<std::string> notes;
  std::vector<TraceStep> steps;
  std::vector<HallRecord> hall;
};

/// A structural precondition failed inside a branch. Carries enough to replay.
class BranchAssertionFailure : public std::runtime_error {
 public:
  BranchAssertionFailure(Violation v, BranchTrace trace)
      : std::runtime_error(v.check + ": " + v.detail), violation(std::move(v)), trace(std::move(trace)) {}
  Violation violation;
  BranchTrace trace;
};

class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(const std::string& what, BranchTrace trace) : std::runtime_error(what), trace(std::move(trace)) {}
  BranchTrace trace;
};

class NotClassMemberError : public std::invalid_argument {
 public:
  explicit NotClassMemberError(Witness w)
      : std::invalid_argument("graph contains an induced " + w.pattern), witness(std::move(w)) {}
  Witness witness;
};

class HallAssignmentError : public std::runtime_error {
 public:
  explicit HallAssignmentError(std::vector<std::size_t> violator)
      : std::runtime_error("no saturating colour assignment"), violator(std::move(violator)) {}
  std::vector<std::size_t> violator;  // cell indices whose palettes are jointly too small
};

struct HallCell {
  VertexSet cell;
  std::vector<int> palette;
};

/// Distinct colours for the given cells, each drawn from its own palette.
inline std::vector<int> hall_assign_component(const std::vector<HallCell>& cells) {
  std::vector<int> colors;
  for (const auto& c : cells)
    for (int x : c.palette) colors.push_back(x);
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  std::vector<BipartiteEdge> edges;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (int x : cells[i].palette) {
      auto pos = std::lower_bound(colors.begin(), colors.end(), x) - colors.begin();
      edges.push_back({i, static_cast<std::size_t>(pos)});
    }
  HopcroftKarp hk(cells.size(), colors.size(), edges);
  const auto m = hk.solve();
  if (!m.saturates_left) throw HallAssignmentError(hk.hall_violator().value_or(std::vector<std::size_t>{}));
  std::vector<int> out(cells.size(), 0);
  for (const auto& [l, r] : m.pairs) out[l] = colors[r];
  return out;
}

struct BoundedColoringOptions {
  bool verify_membership = true;
  std::uint64_t node_budget = kDefaultNodeBudget;
  DecompositionOptions decomposition{};
};

struct BoundedColoringResult {
  Coloring coloring;
  BranchTrace trace;
  std::optional<Decomposition> decomposition;
};

namespace detail {

inline std::vector<int> color_range(int lo, int hi) {
  std::vector<int> out;
  for (int c = lo; c <= hi; ++c) out.push_back(c);
  return out;
}

inline std::vector<int> without(std::vector<int> pal, const std::vector<int>& drop) {
  pal.erase(std::remove_if(pal.begin(), pal.end(),
                           [&](int c) { return std::find(drop.begin(), drop.end(), c) != drop.end(); }),
            pal.end());
  return pal;
}

inline std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Shared state of one branch run: the colouring under construction and its trace.
class Painter {
 public:
  Painter(const Graph& g, BranchTrace& trace) : g_(g), trace_(trace), color_(g.order(), 0) {}

  [[noreturn]] void fail(std::string check, std::string detail, std::vector<Vertex> witness = {}) {
    throw BranchAssertionFailure(Violation{std::move(check), std::move(detail), std::move(witness)}, trace_);
  }

  void paint(const VertexSet& s, int c, const std::string& target) {
    for (Vertex v : s) color_[v] = c;
    if (!s.empty()) trace_.steps.push_back({target, {c}, {c}});
  }

  void paint_vertex(Vertex v, int c) { color_[v] = c; }

  /// Optimal colouring of a P4-free set, mapped onto the palette in order.
  void paint_cograph(const VertexSet& s, const std::vector<int>& palette, const std::string& target,
                     std::size_t min_palette = 0) {
    if (s.empty()) return;
    if (palette.size() < min_palette)
      fail("palette-size", target + " has " + std::to_string(palette.size()) + " colours available, expected at least " +
                               std::to_string(min_palette));
    Coloring c;
    try {
      c = cograph_color_subset(g_, s);
    } catch (const NotP4FreeError& e) {
      auto members = s.to_vector();
      std::vector<Vertex> w;
      if (auto p4 = detect_p4(induced_subgraph(g_, s)))
        for (auto v : p4->vertices) w.push_back(members[v]);
      fail("cell-p4-free", target + " contains an induced P4", w);
    }
    if (c.palette_size > trace_.omega)
      fail("cell-clique-bound", target + " has clique number above the graph's", s.to_vector());
    if (static_cast<std::size_t>(c.palette_size) > palette.size())
      fail("palette-size", target + " needs " + std::to_string(c.palette_size) + " colours but only " +
                               std::to_string(palette.size()) + " are available",
           s.to_vector());
    std::vector<int> used;
    for (Vertex v : s) {
      color_[v] = palette[c.color[v] - 1];
      used.push_back(color_[v]);
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    trace_.steps.push_back({target, palette, used});
  }

  std::vector<int> colors_of(const VertexSet& s) const {
    std::vector<int> out;
    for (Vertex v : s)
      if (color_[v] != 0) out.push_back(color_[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void record(const std::string& target, std::vector<int> palette, const VertexSet& s) {
    trace_.steps.push_back({target, std::move(palette), colors_of(s)});
  }

  const Graph& graph() const { return g_; }
  BranchTrace& trace() { return trace_; }

  Coloring finish(int palette_size) {
    for (Vertex v = 0; v < g_.order(); ++v)
      if (color_[v] == 0) fail("every-vertex-coloured", "vertex " + std::to_string(v) + " left uncoloured", {v});
    Coloring c;
    c.color = std::move(color_);
    c.palette_size = palette_size;
    return c;
  }

 private:
  const Graph& g_;
  BranchTrace& trace_;
  std::vector<int> color_;
};

inline std::string part_label(char side, std::size_t i) { return std::string(1, side) + std::to_string(i); }

inline std::string cell_label(std::size_t i, std::size_t j) {
  return "S[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

inline void paint_a_by_index(Painter& p, const PartiteCover& a) {
  for (std::size_t i = 0; i < a.parts.size(); ++i) p.paint(a.parts[i], static_cast<int>(i) + 1, part_label('A', i));
}

// Z, R_j and T_i are coloured the same way in every branch working on the full grid.
inline void paint_outer_cells(Painter& p, const ClassPartition& cp, const PartiteCover& a, const PartiteCover& b,
                              int m) {
  const auto all = color_range(1, m);
  const std::size_t w = cp.omega;
  p.paint_cograph(cp.z, all, "Z");
  for (std::size_t j = 0; j < cp.k; ++j)
    p.paint_cograph(cp.r[j], without(all, p.colors_of(b.parts[j])), "R" + std::to_string(j));
  for (std::size_t i = 0; i < w; ++i)
    p.paint_cograph(cp.t[i], without(all, p.colors_of(a.parts[i])), "T" + std::to_string(i));
}

inline std::optional<std::pair<std::size_t, std::size_t>> first_nonstable_cell(const Graph& g, const ClassPartition& cp) {
  for (std::size_t i = 0; i < cp.omega; ++i)
    for (std::size_t j = 0; j < cp.k; ++j)
      if (!is_stable(g, cp.s[i][j])) return std::pair{i, j};
  return std::nullopt;
}

// With S[i0][j0] non-stable, the other A parts and other B parts see no edges, so the
// remaining B parts can reuse the colours of the remaining A parts, paired in order.
inline void paint_b_against_nonstable(Painter& p, const Decomposition& d, std::size_t i0, std::size_t j0, int fresh) {
  const auto& a = d.a;
  const auto& b = *d.b;
  const auto& cp = *d.partition;
  const Graph& g = p.graph();
  const VertexSet other_a = cp.a_vertices - a.parts[i0];
  const VertexSet other_b = cp.b_vertices - b.parts[j0];
  if (auto e = find_edge_between(g, other_a, other_b))
    p.fail("nonstable-cell-separates", "A minus part " + std::to_string(i0) + " meets B minus part " + std::to_string(j0),
           {e->first, e->second});
  p.trace().notes.push_back("non-stable cell " + cell_label(i0, j0) + " relabelled to the first row and column");
  p.paint(b.parts[j0], fresh, part_label('B', j0));
  std::vector<std::size_t> a_rest;
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (i != i0) a_rest.push_back(i);
  std::size_t next = 0;
  for (std::size_t j = 0; j < b.parts.size(); ++j) {
    if (j == j0) continue;
    if (next >= a_rest.size()) p.fail("k-at-most-omega", "more B parts than A parts");
    const std::size_t ai = a_rest[next++];
    p.trace().notes.push_back(part_label('B', j) + " takes the colour of " + part_label('A', ai));
    p.paint(b.parts[j], static_cast<int>(ai) + 1, part_label('B', j));
  }
}

inline void hall_components(Painter& p, const Decomposition& d, const VertexSet& ground, int m) {
  const auto& cp = *d.partition;
  const Graph& g = p.graph();
  const auto all = color_range(1, m);
  for (const auto& comp : components(g, ground)) {
    std::vector<HallCell> cells;
    std::vector<std::pair<std::size_t, std::size_t>> where;
    for (std::size_t i = 0; i < cp.omega; ++i)
      for (std::size_t j = 0; j < cp.k; ++j) {
        VertexSet part = comp & cp.s[i][j];
        if (part.empty()) continue;
        cells.push_back({part, without(all, join(p.colors_of(d.a.parts[i]), p.colors_of(d.b->parts[j])))});
        where.emplace_back(i, j);
      }
    bool distinct = cells.size() <= 4;
    for (std::size_t x = 0; x < where.size() && distinct; ++x)
      for (std::size_t y = x + 1; y < where.size() && distinct; ++y)
        if (where[x].first == where[y].first || where[x].second == where[y].second) distinct = false;
    if (!distinct)
      p.fail("omega4-stable-components", "component spans cells sharing a row or column", comp.to_vector());
    std::vector<int> chosen;
    try {
      chosen = hall_assign_component(cells);
    } catch (const HallAssignmentError& e) {
      std::vector<Vertex> w;
      std::string names;
      for (auto idx : e.violator) {
        for (Vertex v : cells[idx].cell) w.push_back(v);
        names += cell_label(where[idx].first, where[idx].second) + " ";
      }
      p.fail("hall-assignment", "cells " + names + "cannot receive distinct colours", w);
    }
    HallRecord rec;
    for (std::size_t t = 0; t < cells.size(); ++t) {
      const auto name = cell_label(where[t].first, where[t].second);
      p.paint(cells[t].cell, chosen[t], name);
      p.trace().steps.back().palette = cells[t].palette;
      rec.cells.push_back(name);
      rec.colors.push_back(chosen[t]);
    }
    p.trace().hall.push_back(std::move(rec));
  }
}

}  // namespace detail

/// Exact colouring for clique number at most 3, checked against the budget.
inline Coloring branch_small_omega(const Graph& g, BranchTrace& trace, std::uint64_t node_budget) {
  trace.branch = Branch::small_omega_oracle;
  const auto budget = color_budget(trace.omega);
  trace.budget = budget.budget;
  if (g.order() == 0) return Coloring(0, 0);
  auto chi = chromatic_number(g, node_budget);
  if (chi.exact) {
    trace.notes.push_back("exact chromatic number " + std::to_string(chi.chi));
    if (chi.chi > budget.budget) throw BudgetExceededError("chromatic number exceeds the budget", trace);
    return chi.coloring;
  }
  // Out of search budget: a budget-sized colouring still settles the bound.
  auto kc = is_k_colorable(g, budget.budget, node_budget);
  if (kc.status == SolveStatus::colorable) {
    trace.notes.push_back("search budget exhausted; budget-sized colouring found");
    return *kc.coloring;
  }
  if (kc.status == SolveStatus::not_colorable) throw BudgetExceededError("chromatic number exceeds the budget", trace);
  throw BranchAssertionFailure(Violation{"oracle-budget", "exact search did not settle the small clique case", {}}, trace);
}

/// H has clique number k <= 3: A by part index, then two P4-free halves of V(H).
inline Coloring branch_small_k(const Graph& g, const Decomposition& d, BranchTrace& trace) {
  trace.branch = Branch::small_k;
  detail::Painter p(g, trace);
  const int w = static_cast<int>(d.omega);
  const int k = static_cast<int>(d.k);
  const int h = w / 2;
  detail::paint_a_by_index(p, d.a);
  VertexSet x = d.by_a.unattached, y = g.empty_set();
  for (int i = 0; i < w; ++i) (i < h ? x : y) |= d.by_a.by_part[i];
  p.paint_cograph(x, detail::color_range(h + 1, h + k), "X");
  auto ypal = detail::color_range(1, h);
  if (k > h) ypal = detail::join(ypal, detail::color_range(h + k + 1, 2 * k));
  p.paint_cograph(y, ypal, "Y");
  const int total = std::max(2 * k, w);
  if (total > trace.budget) p.fail("small-k-budget", "max(2k, w) exceeds the budget");
  return p.finish(trace.budget);
}

/// Some A vertex sees two parts of B: w + 2 colours suffice.
inline Coloring branch_split_b(const Graph& g, const Decomposition& d, BranchTrace& trace) {
  trace.branch = Branch::split_b_parts;
  detail::Painter p(g, trace);
  const auto& tr = *d.split.trigger;
  const std::size_t w = d.omega;
  const std::size_t t = tr.a_part;
  trace.notes.push_back("trigger vertex " + std::to_string(tr.vertex) + " in " + detail::part_label('A', t));
  std::optional<std::size_t> drop;
  for (std::size_t j = 0; j < w && !drop; ++j) {
    if (j == t) continue;
    VertexSet u = g.empty_set();
    for (std::size_t i = 0; i < w; ++i)
      if (i != t && i != j) u |= d.by_a.by_part[i];
    if (is_stable(g, u)) drop = j;
  }
  if (!drop) p.fail("split-stable-union", "no stable union of w-2 attachment classes avoiding the trigger part");
  const std::size_t j = *drop;
  trace.notes.push_back("attachment classes other than " + std::to_string(t) + " and " + std::to_string(j) +
                        " form a stable set");
  detail::paint_a_by_index(p, d.a);
  VertexSet perfect = d.by_a.unattached | d.by_a.by_part[t] | d.by_a.by_part[j];
  VertexSet stable = d.h - perfect;
  p.paint_cograph(perfect,
                  detail::without(detail::color_range(1, static_cast<int>(w) + 2),
                                  {static_cast<int>(t) + 1, static_cast<int>(j) + 1}),
                  "C0+C" + std::to_string(t) + "+C" + std::to_string(j));
  p.paint(stable, static_cast<int>(t) + 1, "stable union");
  if (static_cast<int>(w) + 2 > trace.budget) p.fail("split-budget", "w + 2 exceeds the budget");
  return p.finish(trace.budget);
}

/// Clique number 4 with k = 4: six colours.
inline Coloring branch_omega_four(const Graph& g, const Decomposition& d, BranchTrace& trace) {
  trace.branch = Branch::omega_four;
  detail::Painter p(g, trace);
  const auto& cp = *d.partition;
  const auto& b = *d.b;
  if (d.k != 4) p.fail("omega4-k-equals-4", "k = " + std::to_string(d.k));
  detail::paint_a_by_index(p, d.a);
  const auto six = detail::color_range(1, 6);
  if (auto cell = detail::first_nonstable_cell(g, cp)) {
    trace.notes.push_back("sub-scheme: a non-stable S cell");
    detail::paint_b_against_nonstable(p, d, cell->first, cell->second, 5);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (!is_stable(g, cp.s[i][j]))
          p.paint_cograph(cp.s[i][j],
                          detail::without(six, detail::join(p.colors_of(d.a.parts[i]), p.colors_of(b.parts[j]))),
                          detail::cell_label(i, j), 4);
    detail::hall_components(p, d, cp.s_prime, 6);
  } else {
    trace.notes.push_back("sub-scheme: all S cells stable");
    // Colour lo for vertices missing the A part coloured lo, lo + 1 for the rest.
    auto split_pair = [&](std::size_t j, int lo) {
      const VertexSet& a_lo = d.a.parts[lo - 1];
      for (Vertex v : b.parts[j]) p.paint_vertex(v, g.neighbors(v).intersects(a_lo) ? lo + 1 : lo);
      p.record(detail::part_label('B', j), {lo, lo + 1}, b.parts[j]);
    };
    split_pair(0, 1);
    split_pair(1, 3);
    p.paint(b.parts[2], 5, detail::part_label('B', 2));
    p.paint(b.parts[3], 6, detail::part_label('B', 3));
    detail::hall_components(p, d, cp.s_union(), 6);
  }
  detail::paint_outer_cells(p, cp, d.a, b, 6);
  return p.finish(6);
}

/// w >= 5 with a non-stable S cell.
inline Coloring branch_nonstable_cell(const Graph& g, const Decomposition& d, BranchTrace& trace) {
  trace.branch = Branch::nonstable_cell;
  detail::Painter p(g, trace);
  const auto& cp = *d.partition;
  const auto& b = *d.b;
  const int w = static_cast<int>(d.omega);
  const int m = color_budget(w).budget;
  const auto all = detail::color_range(1, m);
  const auto cell = *detail::first_nonstable_cell(g, cp);
  detail::paint_a_by_index(p, d.a);
  detail::paint_b_against_nonstable(p, d, cell.first, cell.second, w + 1);
  for (std::size_t i = 0; i < cp.omega; ++i)
    for (std::size_t j = 0; j < cp.k; ++j)
      p.paint_cograph(cp.s[i][j], detail::without(all, detail::join(p.colors_of(d.a.parts[i]), p.colors_of(b.parts[j]))),
                      detail::cell_label(i, j), static_cast<std::size_t>(w));
  detail::paint_outer_cells(p, cp, d.a, b, m);
  return p.finish(m);
}

/// w >= 5 with every S cell stable: three bands of B parts.
inline Coloring branch_stable_cells(const Graph& g, const Decomposition& d, BranchTrace& trace) {
  trace.branch = Branch::stable_cells;
  detail::Painter p(g, trace);
  const auto& cp = *d.partition;
  const auto& a = d.a;
  const auto& b = *d.b;
  const int w = static_cast<int>(d.omega);
  const int k = static_cast<int>(d.k);
  const int q = ceil_div(w, 3);
  const int m = w + q;
  if (m != color_budget(w).budget) p.fail("stable-cells-budget", "w + ceil(w/3) differs from the budget");
  if (!band_arithmetic_holds(w)) p.fail("band-arithmetic", "middle band needs more colours than the low band offers");

  // Parts are 1-based below to keep the index bands readable.
  auto A = [&](int i) -> const VertexSet& { return a.parts[i - 1]; };
  auto B = [&](int i) -> const VertexSet& { return b.parts[i - 1]; };
  for (int i = 1; i <= w; ++i) {
    if (i <= w - q || i > k) {
      p.paint(A(i), i, detail::part_label('A', i - 1));
      continue;
    }
    for (Vertex v : A(i)) p.paint_vertex(v, g.neighbors(v).intersects(B(i)) ? i + q : i);
    p.record(detail::part_label('A', i - 1), {i, i + q}, A(i));
  }
  int next_pair = 1;
  for (int i = 1; i <= k; ++i) {
    if (i <= q) {
      p.paint(B(i), w + i, detail::part_label('B', i - 1));
    } else if (i >= w - q + 1) {
      p.paint(B(i), i, detail::part_label('B', i - 1));
    } else {
      const int c1 = next_pair, c2 = next_pair + 1;
      next_pair += 2;
      if (c2 > w - q) p.fail("band-arithmetic", "ran out of low colours for " + detail::part_label('B', i - 1));
      for (Vertex v : B(i)) p.paint_vertex(v, g.neighbors(v).intersects(A(c1)) ? c2 : c1);
      p.record(detail::part_label('B', i - 1), {c1, c2}, B(i));
    }
  }
  const auto all = detail::color_range(1, m);
  for (std::size_t i = 0; i < cp.omega; ++i)
    for (std::size_t j = 0; j < cp.k; ++j) {
      if (cp.s[i][j].empty()) continue;
      auto pal = detail::without(all, detail::join(p.colors_of(a.parts[i]), p.colors_of(b.parts[j])));
      if (pal.empty()) p.fail("cell-palette-nonempty", detail::cell_label(i, j) + " has no colour left");
      p.paint(cp.s[i][j], pal.front(), detail::cell_label(i, j));
      p.trace().steps.back().palette = pal;
    }
  detail::paint_outer_cells(p, cp, a, b, m);
  return p.finish(m);
}

/// Colours a class member within its budget by following the structure of its
/// decomposition. The result is re-verified independently of the branch logic.
inline BoundedColoringResult color_class_member(const Graph& g, const BoundedColoringOptions& opts = {}) {
  if (opts.verify_membership) {
    if (!is_class_member_fast(g)) throw NotClassMemberError(*is_class_member(g).witness);
  }
  BoundedColoringResult res;
  auto& trace = res.trace;
  const auto cl = clique_number(g);
  trace.omega = static_cast<int>(cl.size);
  trace.budget = color_budget(trace.omega).budget;
  if (trace.omega <= 3) {
    res.coloring = branch_small_omega(g, trace, opts.node_budget);
  } else {
    Decomposition d = decompose(g, opts.decomposition);
    trace.k = static_cast<int>(d.k);
    if (!d.certified()) trace.notes.push_back("cover search hit its node budget; covers are maximal but uncertified");
    if (!d.violations.empty()) throw BranchAssertionFailure(d.violations.front(), trace);
    if (d.k <= 3)
      res.coloring = branch_small_k(g, d, trace);
    else if (d.split.trigger)
      res.coloring = branch_split_b(g, d, trace);
    else if (d.omega == 4)
      res.coloring = branch_omega_four(g, d, trace);
    else if (detail::first_nonstable_cell(g, *d.partition))
      res.coloring = branch_nonstable_cell(g, d, trace);
    else
      res.coloring = branch_stable_cells(g, d, trace);
    res.decomposition = std::move(d);
  }
  res.coloring.palette_size = trace.budget;
  if (res.coloring.max_color() > trace.budget)
    throw BudgetExceededError("colouring uses colour " + std::to_string(res.coloring.max_color()) + " beyond budget " +
                                  std::to_string(trace.budget),
                              trace);
  if (!is_proper(g, res.coloring))
    throw BranchAssertionFailure(Violation{"proper-colouring", "branch produced an improper colouring", {}}, trace);
  return res;
}

}  // namespace chibound
