#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

struct CliqueResult {
  std::size_t size = 0;
  VertexSet witness;
};

namespace detail {

// Branch and bound with a sequential greedy colouring as the pruning bound.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g), best_(g.empty_set()) {}

  CliqueResult run(const VertexSet& candidates) {
    std::vector<Vertex> current;
    if (!candidates.empty()) expand(current, candidates);
    return {best_size_, best_};
  }

 private:
  void expand(std::vector<Vertex>& current, VertexSet cand) {
    std::vector<std::pair<Vertex, std::size_t>> order;
    order.reserve(cand.size());
    {
      VertexSet rest = cand;
      std::size_t color = 0;
      while (!rest.empty()) {
        ++color;
        VertexSet cls = rest;
        while (!cls.empty()) {
          const Vertex v = cls.first();
          order.emplace_back(v, color);
          rest.erase(v);
          cls.erase(v);
          cls -= g_.neighbors(v);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      const auto [v, bound] = order[i];
      if (current.size() + bound <= best_size_) return;
      current.push_back(v);
      VertexSet next = cand & g_.neighbors(v);
      if (next.empty()) {
        if (current.size() > best_size_) {
          best_size_ = current.size();
          best_ = VertexSet::from_range(g_.order(), current);
        }
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      cand.erase(v);
    }
  }

  const Graph& g_;
  std::size_t best_size_ = 0;
  VertexSet best_;
};

}  // namespace detail

/// Maximum clique of g[within].
inline CliqueResult clique_number_in(const Graph& g, const VertexSet& within) {
  check_vertex_set(g, within);
  return detail::MaxCliqueSearch(g).run(within);
}

inline CliqueResult clique_number(const Graph& g) { return clique_number_in(g, g.vertices()); }

}  // namespace chibound
