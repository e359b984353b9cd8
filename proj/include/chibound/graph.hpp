#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chibound/vertex_set.hpp"

namespace chibound {

using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

/// Simple undirected graph on vertices 0..n-1 with one adjacency bit row per vertex.
///
/// Values are immutable; build or modify through GraphBuilder.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return rows_.size(); }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    return rows_[u].contains(v);
  }

  const VertexSet& neighbors(Vertex v) const {
    check(v);
    return rows_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.size();
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v = rows_[u].next(u + 1); v != kNoVertex; v = rows_[u].next(v + 1)) out.emplace_back(u, v);
    return out;
  }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  friend class GraphBuilder;

  void check(Vertex v) const {
    if (v >= rows_.size())
      throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                              std::to_string(rows_.size()));
  }

  std::vector<VertexSet> rows_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  std::size_t order() const { return g_.order(); }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    g_.rows_[u].insert(v);
    g_.rows_[v].insert(u);
    return *this;
  }

  GraphBuilder& remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    g_.rows_[u].erase(v);
    g_.rows_[v].erase(u);
    return *this;
  }

  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

  /// View of the graph as currently built.
  const Graph& peek() const { return g_; }

  Graph build() const& { return g_; }
  Graph build() && { return std::move(g_); }

 private:
  void check_pair(Vertex u, Vertex v) const {
    g_.check(u);
    g_.check(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }

  Graph g_;
};

inline Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline void check_vertex_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw std::out_of_range("vertex set universe " + std::to_string(s.universe()) +
                            " does not match graph order " + std::to_string(g.order()));
}

/// G[s] with vertices relabelled in ascending order of s.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  check_vertex_set(g, s);
  const auto members = s.to_vector();
  GraphBuilder b(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) b.add_edge(i, j);
  return std::move(b).build();
}

/// Overload taking an explicit vertex list; vertex i of the result is members[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& members) {
  GraphBuilder b(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= g.order()) throw std::out_of_range("vertex " + std::to_string(members[i]) + " not in graph");
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j]) throw std::invalid_argument("repeated vertex in induced_subgraph");
      if (g.adjacent(members[i], members[j])) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const std::size_t off = g1.order();
  GraphBuilder b(off + g2.order());
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(u + off, v + off);
  return std::move(b).build();
}

inline const VertexSet& neighbors(const Graph& g, Vertex v) { return g.neighbors(v); }

inline VertexSet neighbors_in(const Graph& g, Vertex v, const VertexSet& s) {
  check_vertex_set(g, s);
  return g.neighbors(v) & s;
}

/// Vertices of g adjacent to every member of s (s itself excluded automatically).
inline VertexSet common_neighbors(const Graph& g, const VertexSet& s) {
  VertexSet out = g.vertices();
  for (Vertex v : s) out &= g.neighbors(v);
  return out;
}

/// Vertices with at least one neighbour in s.
inline VertexSet neighborhood_of(const Graph& g, const VertexSet& s) {
  VertexSet out = g.empty_set();
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

namespace detail {
inline void require_disjoint(const VertexSet& x, const VertexSet& y) {
  if (x.intersects(y)) throw std::invalid_argument("vertex sets overlap");
}
}  // namespace detail

inline bool is_complete_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  check_vertex_set(g, x);
  check_vertex_set(g, y);
  detail::require_disjoint(x, y);
  for (Vertex v : x)
    if (!y.is_subset_of(g.neighbors(v))) return false;
  return true;
}

inline bool is_anticomplete_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  check_vertex_set(g, x);
  check_vertex_set(g, y);
  detail::require_disjoint(x, y);
  for (Vertex v : x)
    if (g.neighbors(v).intersects(y)) return false;
  return true;
}

/// First edge (u, v) with u in x, v in y, if any. Sets need not be disjoint.
inline std::optional<Edge> find_edge_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  for (Vertex u : x) {
    const Vertex v = (g.neighbors(u) & y).first();
    if (v != kNoVertex) return Edge{u, v};
  }
  return std::nullopt;
}

inline bool is_stable(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    VertexSet others = s;
    others.erase(v);
    if (!others.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

/// Connected components of g[s], each as a vertex set, ordered by least vertex.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp = g.empty_set();
    VertexSet frontier = g.empty_set();
    frontier.insert(left.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next = neighborhood_of(g, frontier);
      next &= left;
      next -= comp;
      frontier = std::move(next);
    }
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace chibound
