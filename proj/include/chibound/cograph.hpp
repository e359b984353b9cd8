#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chibound/coloring.hpp"
#include "chibound/graph.hpp"

namespace chibound {

class NotP4FreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cotree: leaves are vertices, internal nodes are disjoint unions or joins.
struct Cotree {
  enum class Kind { leaf, disjoint_union, join };
  struct Node {
    Kind kind = Kind::leaf;
    Vertex vertex = kNoVertex;
    std::vector<std::size_t> children;
  };
  std::vector<Node> nodes;
  std::size_t root = 0;
};

/// Components of the complement of g[s].
inline std::vector<VertexSet> co_components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp = g.empty_set();
    std::vector<Vertex> stack{left.first()};
    left.erase(stack.back());
    comp.insert(stack.back());
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      const VertexSet next = left - g.neighbors(v);
      for (Vertex u : next) {
        left.erase(u);
        comp.insert(u);
        stack.push_back(u);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

namespace detail {
inline std::optional<std::size_t> build_cotree(const Graph& g, const VertexSet& s, Cotree& t) {
  if (s.size() == 1) {
    t.nodes.push_back({Cotree::Kind::leaf, s.first(), {}});
    return t.nodes.size() - 1;
  }
  Cotree::Kind kind = Cotree::Kind::disjoint_union;
  auto parts = components(g, s);
  if (parts.size() == 1) {
    kind = Cotree::Kind::join;
    parts = co_components(g, s);
    // Connected and co-connected on two or more vertices: contains a P4.
    if (parts.size() == 1) return std::nullopt;
  }
  std::vector<std::size_t> kids;
  for (const auto& p : parts) {
    auto c = build_cotree(g, p, t);
    if (!c) return std::nullopt;
    kids.push_back(*c);
  }
  t.nodes.push_back({kind, kNoVertex, std::move(kids)});
  return t.nodes.size() - 1;
}
}  // namespace detail

/// Cotree of g[s] by recursive component / co-component splitting; nullopt when
/// g[s] is not a cograph.
inline std::optional<Cotree> recognize_cograph(const Graph& g, const VertexSet& s) {
  check_vertex_set(g, s);
  Cotree t;
  if (s.empty()) return t;
  auto root = detail::build_cotree(g, s, t);
  if (!root) return std::nullopt;
  t.root = *root;
  return t;
}

inline std::optional<Cotree> recognize_cograph(const Graph& g) { return recognize_cograph(g, g.vertices()); }

inline bool is_cograph(const Graph& g) { return recognize_cograph(g).has_value(); }

/// Optimal colouring of the cograph g[s], colours 1..c with c = ω(g[s]).
/// Entries outside s are left 0. Union nodes reuse colours (max); join nodes stack
/// their children's palettes (sum).
inline Coloring cograph_color_subset(const Graph& g, const VertexSet& s) {
  auto t = recognize_cograph(g, s);
  if (!t) throw NotP4FreeError("cograph colouring requires a P4-free vertex set");
  Coloring c(g.order(), 0);
  if (s.empty()) return c;
  auto paint = [&](auto&& self, std::size_t node, int offset) -> int {
    const auto& nd = t->nodes[node];
    if (nd.kind == Cotree::Kind::leaf) {
      c.color[nd.vertex] = offset + 1;
      return 1;
    }
    int width = 0;
    for (auto child : nd.children) {
      if (nd.kind == Cotree::Kind::disjoint_union)
        width = std::max(width, self(self, child, offset));
      else
        width += self(self, child, offset + width);
    }
    return width;
  };
  c.palette_size = paint(paint, t->root, 0);
  return c;
}

inline Coloring cograph_optimal_coloring(const Graph& g) { return cograph_color_subset(g, g.vertices()); }

}  // namespace chibound
