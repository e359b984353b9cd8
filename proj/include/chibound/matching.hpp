#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chibound {

struct MatchingResult {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (left, right), sorted by left
  bool saturates_left = false;
};

using BipartiteEdge = std::pair<std::size_t, std::size_t>;

/// Hopcroft-Karp maximum cardinality matching.
class HopcroftKarp {
 public:
  HopcroftKarp(std::size_t left, std::size_t right, const std::vector<BipartiteEdge>& edges)
      : left_(left), right_(right), adj_(left), match_l_(left, kFree), match_r_(right, kFree), dist_(left) {
    for (auto [u, v] : edges) {
      if (u >= left || v >= right)
        throw std::out_of_range("bipartite edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
      adj_[u].push_back(v);
    }
  }

  MatchingResult solve() {
    std::size_t size = 0;
    while (bfs())
      for (std::size_t u = 0; u < left_; ++u)
        if (match_l_[u] == kFree && dfs(u)) ++size;
    MatchingResult r;
    for (std::size_t u = 0; u < left_; ++u)
      if (match_l_[u] != kFree) r.pairs.emplace_back(u, match_l_[u]);
    r.saturates_left = size == left_;
    return r;
  }

  /// After solve(): left vertices reachable by alternating paths from an unmatched
  /// left vertex. Their neighbourhood is smaller than the set (König).
  std::optional<std::vector<std::size_t>> hall_violator() const {
    std::vector<bool> seen_l(left_, false), seen_r(right_, false);
    std::vector<std::size_t> stack;
    for (std::size_t u = 0; u < left_; ++u)
      if (match_l_[u] == kFree) {
        stack.push_back(u);
        seen_l[u] = true;
        break;
      }
    if (stack.empty()) return std::nullopt;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto v : adj_[u]) {
        if (seen_r[v]) continue;
        seen_r[v] = true;
        const auto w = match_r_[v];
        if (w != kFree && !seen_l[w]) {
          seen_l[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::vector<std::size_t> s;
    for (std::size_t u = 0; u < left_; ++u)
      if (seen_l[u]) s.push_back(u);
    return s;
  }

 private:
  static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < left_; ++u) {
      if (match_l_[u] == kFree) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto v : adj_[u]) {
        const auto w = match_r_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (auto v : adj_[u]) {
      const auto w = match_r_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_l_[u] = v;
        match_r_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  std::size_t left_, right_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_l_, match_r_, dist_;
};

inline MatchingResult max_bipartite_matching(std::size_t left_size, std::size_t right_size,
                                             const std::vector<BipartiteEdge>& edges) {
  return HopcroftKarp(left_size, right_size, edges).solve();
}

}  // namespace chibound
