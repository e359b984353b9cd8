#pragma once
// Brute-force reference implementations. Deliberately naive: subset and map
// enumeration only, no pruning beyond what the definitions force.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "chibound/graph.hpp"

namespace oracle {

using chibound::Graph;
using chibound::GraphBuilder;
using chibound::Vertex;
using chibound::VertexSet;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) b.add_edge(i, j);
  return std::move(b).build();
}

inline bool maps_induced(const Graph& g, const Graph& t, const std::vector<Vertex>& img) {
  for (Vertex a = 0; a < t.order(); ++a)
    for (Vertex b = a + 1; b < t.order(); ++b)
      if (g.adjacent(img[a], img[b]) != t.adjacent(a, b)) return false;
  return true;
}

/// Least induced copy: minimal sorted image set, then minimal listing onto it.
inline std::optional<std::vector<Vertex>> least_induced_copy(const Graph& g, const Graph& t) {
  const std::size_t k = t.order(), n = g.order();
  if (k > n) return std::nullopt;
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> best;
  std::vector<Vertex> img;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    if (img.size() == k) {
      if (!maps_induced(g, t, img)) return;
      auto key = img;
      std::sort(key.begin(), key.end());
      if (!best || std::pair{key, img} < *best) best = std::pair{key, img};
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      img.push_back(v);
      self(self);
      img.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  if (!best) return std::nullopt;
  return best->second;
}

inline bool contains_induced(const Graph& g, const Graph& t) { return least_induced_copy(g, t).has_value(); }

inline std::size_t clique_number(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if ((m >> v) & 1U) s.push_back(v);
    if (s.size() <= best) continue;
    bool ok = true;
    for (std::size_t a = 0; a < s.size() && ok; ++a)
      for (std::size_t b = a + 1; b < s.size() && ok; ++b) ok = g.adjacent(s[a], s[b]);
    if (ok) best = s.size();
  }
  return best;
}

/// Plain index-order backtracking, no heuristics.
inline bool k_colorable(const Graph& g, int k) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  if (k <= 0) return false;
  std::vector<int> c(n, 0);
  auto rec = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (int x = 1; x <= k; ++x) {
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u)
        if (g.adjacent(u, v) && c[u] == x) ok = false;
      if (!ok) continue;
      c[v] = x;
      if (self(self, v + 1)) return true;
    }
    c[v] = 0;
    return false;
  };
  return rec(rec, 0);
}

inline int chromatic_number(const Graph& g) {
  int k = 0;
  while (!k_colorable(g, k)) ++k;
  return k;
}

inline std::size_t max_matching(std::size_t left, std::size_t right, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<bool> used(right, false);
  auto rec = [&](auto&& self, std::size_t u) -> std::size_t {
    if (u == left) return 0;
    std::size_t best = self(self, u + 1);
    for (auto [a, b] : edges) {
      if (a != u || used[b]) continue;
      used[b] = true;
      best = std::max(best, 1 + self(self, u + 1));
      used[b] = false;
    }
    return best;
  };
  return rec(rec, 0);
}

inline bool hall_condition(std::size_t left, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << left); ++s) {
    std::vector<std::size_t> nb;
    for (auto [a, b] : edges)
      if ((s >> a) & 1U) nb.push_back(b);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    if (nb.size() < static_cast<std::size_t>(__builtin_popcountll(s))) return false;
  }
  return true;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Vertex a = 0; a < g.order() && ok; ++a)
      for (Vertex b = a + 1; b < g.order() && ok; ++b) ok = g.adjacent(a, b) == h.adjacent(p[a], p[b]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool p4_free(const Graph& g) {
  GraphBuilder b(4);
  b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3);
  return !contains_induced(g, b.build());
}

/// Complete p-partite on s: non-adjacency restricted to s is an equivalence
/// relation with exactly p classes.
inline bool is_complete_multipartite_on(const Graph& g, const std::vector<Vertex>& s, std::size_t p) {
  std::vector<int> cls(s.size(), -1);
  int classes = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = classes++;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) {
        if (cls[j] >= 0) return false;
        cls[j] = cls[i];
      }
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if ((cls[i] == cls[j]) == g.adjacent(s[i], s[j])) return false;
  return static_cast<std::size_t>(classes) == p;
}

inline std::size_t max_multipartite_order(const Graph& g, std::size_t p, const VertexSet& ground) {
  const auto gv = ground.to_vector();
  std::size_t best = 0;
  bool found = false;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << gv.size()); ++m) {
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < gv.size(); ++i)
      if ((m >> i) & 1U) s.push_back(gv[i]);
    if (found && s.size() <= best) continue;
    if (is_complete_multipartite_on(g, s, p)) {
      best = s.size();
      found = true;
    }
  }
  return best;
}

}  // namespace oracle
