#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/patterns.hpp"

namespace chibound {

/// Mycielskian: shadow u' of each u adjacent to N(u), apex adjacent to every shadow.
inline Graph mycielski(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(2 * n + 1);
  for (auto [u, v] : g.edges()) {
    b.add_edge(u, v);
    b.add_edge(u, n + v);
    b.add_edge(v, n + u);
  }
  for (Vertex u = 0; u < n; ++u) b.add_edge(n + u, 2 * n);
  return std::move(b).build();
}

/// u_i = i on a 5-cycle, w_i = 5 + i adjacent to u_{i-1}, u_{i+1}, apex 10.
inline Graph grotzsch() {
  GraphBuilder b(11);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, (i + 4) % 5);
    b.add_edge(5 + i, (i + 1) % 5);
    b.add_edge(5 + i, 10);
  }
  return std::move(b).build();
}

/// Vertex id of a_i^j (1-based i, j) in extremal(w).
inline Vertex extremal_a(std::size_t w, std::size_t i, std::size_t j) { return (i - 1) * w + (j - 1); }
/// Vertex id of b_i^j (1-based i, j) in extremal(w).
inline Vertex extremal_b(std::size_t w, std::size_t i, std::size_t j) { return w * w + (i - 1) * w + (j - 1); }

/// Two complete w-partite graphs with parts of size w, joined by the perfect matching
/// a_j^i ~ b_i^j.
inline Graph extremal(int omega) {
  if (omega < 4) throw std::invalid_argument("extremal construction needs clique number at least 4");
  const std::size_t w = static_cast<std::size_t>(omega);
  GraphBuilder b(2 * w * w);
  for (std::size_t i1 = 1; i1 <= w; ++i1)
    for (std::size_t i2 = i1 + 1; i2 <= w; ++i2)
      for (std::size_t j1 = 1; j1 <= w; ++j1)
        for (std::size_t j2 = 1; j2 <= w; ++j2) {
          b.add_edge(extremal_a(w, i1, j1), extremal_a(w, i2, j2));
          b.add_edge(extremal_b(w, i1, j1), extremal_b(w, i2, j2));
        }
  for (std::size_t i = 1; i <= w; ++i)
    for (std::size_t j = 1; j <= w; ++j) b.add_edge(extremal_a(w, j, i), extremal_b(w, i, j));
  return std::move(b).build();
}

// std::uniform_*_distribution differ across standard libraries; these do not.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

inline double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

namespace detail {

inline void repair_into_class(GraphBuilder& b, std::mt19937_64& rng) {
  for (;;) {
    const Graph& g = b.peek();
    auto w = detect_hvn(g);
    if (!w) w = detect_p2_union_p4(g);
    if (!w) return;
    std::vector<Edge> inside;
    for (std::size_t x = 0; x < w->vertices.size(); ++x)
      for (std::size_t y = x + 1; y < w->vertices.size(); ++y)
        if (g.adjacent(w->vertices[x], w->vertices[y])) inside.emplace_back(w->vertices[x], w->vertices[y]);
    const auto [u, v] = inside[uniform_below(rng, inside.size())];
    b.remove_edge(u, v);
  }
}

}  // namespace detail

/// G(n, p) followed by repair: while a forbidden pattern is present, delete a uniformly
/// chosen edge of the found copy. Edge deletion only, so it stops after at most |E| steps.
inline Graph sample_class_member(std::size_t n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample needs at least one vertex");
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  GraphBuilder b(n);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (uniform_unit(rng) < density) b.add_edge(i, j);
  detail::repair_into_class(b, rng);
  return std::move(b).build();
}

/// A random induced subgraph of extremal(w) (some B parts possibly dropped), extra
/// vertices complete to one part of either side or to one part of each, occasionally
/// an A vertex complete to several B parts, and sparse added noise; labels shuffled.
/// Repair deletes witness edges, preferring edges outside the planted base. Deletion
/// only, so it terminates. `density` scales edges among the extras and the noise.
inline Graph sample_planted_member(std::size_t n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample needs at least one vertex");
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  auto coin = [&](double p) { return uniform_unit(rng) < p; };
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(label[i - 1], label[uniform_below(rng, i)]);

  GraphBuilder b(n);
  auto link = [&](Vertex x, Vertex y) {
    if (x != y) b.add_edge(label[x], label[y]);
  };
  // Side 0 is A, side 1 is B; part index within the side, -1 outside the base.
  std::vector<int> side(n, -1), part(n, -1);
  const std::size_t w = std::min<std::size_t>(4 + uniform_below(rng, 4), n / 3);
  std::size_t kb = 0, next = 0;
  if (w >= 4) {
    const Graph base = extremal(static_cast<int>(w));
    kb = uniform_below(rng, w + 1);
    const std::size_t target = std::min(n, n * (45 + uniform_below(rng, 40)) / 100);
    std::vector<Vertex> pool, chosen;
    for (std::size_t i = 1; i <= w; ++i) chosen.push_back(extremal_a(w, i, 1 + uniform_below(rng, w)));
    for (std::size_t i = 1; i <= kb; ++i) chosen.push_back(extremal_b(w, i, 1 + uniform_below(rng, w)));
    for (Vertex v = 0; v < base.order(); ++v) {
      if (v >= w * w && (v - w * w) / w >= kb) continue;
      if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) pool.push_back(v);
    }
    while (chosen.size() < target && !pool.empty()) {
      const std::size_t pick = uniform_below(rng, pool.size());
      chosen.push_back(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    if (chosen.size() > n) chosen.resize(n);
    for (std::size_t x = 0; x < chosen.size(); ++x) {
      side[x] = chosen[x] >= w * w ? 1 : 0;
      part[x] = static_cast<int>((chosen[x] % (w * w)) / w);
      for (std::size_t y = x + 1; y < chosen.size(); ++y)
        if (base.adjacent(chosen[x], chosen[y])) link(x, y);
    }
    next = chosen.size();
  }
  auto complete_to = [&](Vertex x, int sd, int pt) {
    for (Vertex y = 0; y < next; ++y)
      if (side[y] == sd && part[y] == pt) link(x, y);
  };
  if (kb >= 3 && coin(0.15)) {
    // An A vertex complete to all but one B part.
    const int skip = static_cast<int>(uniform_below(rng, kb));
    for (Vertex x = 0; x < next; ++x)
      if (side[x] == 0) {
        for (int pt = 0; pt < static_cast<int>(kb); ++pt)
          if (pt != skip) complete_to(x, 1, pt);
        break;
      }
  }
  // Extra vertices share one attachment profile per group so that groups can be
  // non-stable cells.
  int group_a = -1, group_b = -1;
  for (Vertex x = next; x < n; ++x) {
    if (next > 0 && (group_a < 0 || coin(0.4))) {
      group_a = coin(0.7) ? static_cast<int>(uniform_below(rng, w)) : -1;
      group_b = kb > 0 && coin(0.7) ? static_cast<int>(uniform_below(rng, kb)) : -1;
    }
    if (next > 0) {
      if (group_a >= 0) complete_to(x, 0, group_a);
      if (group_b >= 0) complete_to(x, 1, group_b);
    }
    for (Vertex y = next; y < x; ++y)
      if (coin(density / 2)) link(x, y);
  }
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (coin(density / 100)) link(x, y);
  std::vector<Vertex> slot(n);
  for (Vertex x = 0; x < n; ++x) slot[label[x]] = x;
  auto is_planted = [&](Vertex u, Vertex v) { return side[slot[u]] >= 0 && side[slot[v]] >= 0; };
  for (;;) {
    const Graph& g = b.peek();
    auto wit = detect_hvn(g);
    if (!wit) wit = detect_p2_union_p4(g);
    if (!wit) break;
    std::vector<Edge> inside, loose;
    for (std::size_t x = 0; x < wit->vertices.size(); ++x)
      for (std::size_t y = x + 1; y < wit->vertices.size(); ++y) {
        const Vertex u = wit->vertices[x], v = wit->vertices[y];
        if (!g.adjacent(u, v)) continue;
        inside.emplace_back(u, v);
        if (!is_planted(u, v)) loose.emplace_back(u, v);
      }
    const auto& from = loose.empty() ? inside : loose;
    const auto [u, v] = from[uniform_below(rng, from.size())];
    b.remove_edge(u, v);
  }
  return std::move(b).build();
}

inline constexpr std::size_t kMaxEnumerationOrder = 7;

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Bit t of the mask is the t-th vertex pair in graph6 order (column by column).
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  GraphBuilder b(n);
  std::size_t t = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++t)
      if ((mask >> t) & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

inline std::uint64_t mask_of(const Graph& g) {
  std::uint64_t m = 0;
  std::size_t t = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i, ++t)
      if (g.adjacent(i, j)) m |= std::uint64_t{1} << t;
  return m;
}

inline void check_enumeration_order(std::size_t n) {
  if (n > kMaxEnumerationOrder) throw std::invalid_argument("enumeration supports at most 7 vertices");
}

/// Labelled graphs with masks in [lo, hi), in mask order.
template <class Visit>
void for_each_labeled_graph(std::size_t n, std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  check_enumeration_order(n);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  hi = std::min(hi, total);
  for (std::uint64_t m = lo; m < hi; ++m) visit(graph_from_mask(n, m));
}

template <class Visit>
void for_each_labeled_graph(std::size_t n, Visit&& visit) {
  for_each_labeled_graph(n, 0, UINT64_MAX, std::forward<Visit>(visit));
}

/// Class members among labelled graphs on n vertices. With dedup, only the member of
/// least mask in each isomorphism class is produced.
template <class Visit>
void enumerate_class_members(std::size_t n, bool dedup, Visit&& visit) {
  check_enumeration_order(n);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  std::vector<bool> seen(dedup ? total : 0, false);
  std::vector<std::size_t> perm(n);
  for (std::uint64_t m = 0; m < total; ++m) {
    if (dedup && seen[m]) continue;
    Graph g = graph_from_mask(n, m);
    if (dedup) {
      // Least mask of its orbit: mark every relabelling.
      std::iota(perm.begin(), perm.end(), 0);
      const auto edges = g.edges();
      do {
        std::uint64_t pm = 0;
        for (auto [u, v] : edges) {
          std::size_t a = perm[u], b = perm[v];
          if (a > b) std::swap(a, b);
          pm |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
        }
        seen[pm] = true;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (is_class_member_fast(g)) visit(g);
  }
}

}  // namespace chibound
