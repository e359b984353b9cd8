#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

enum class PatternKind { p2_union_p4, hvn, p4, p2_union_p3, diamond, complete, c5 };

inline constexpr std::size_t kMaxTemplateOrder = 6;

struct Pattern {
  PatternKind kind;
  std::string name;
  Graph templ;

  std::size_t order() const { return templ.order(); }
};

namespace patterns {

inline Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

inline Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

inline Graph cycle_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

/// K5 minus the edges {0,1} and {0,2}: vertex 0 sees exactly 3 and 4.
inline Graph hvn_graph() {
  GraphBuilder b(complete_graph(5));
  b.remove_edge(0, 1).remove_edge(0, 2);
  return std::move(b).build();
}

/// Vertices 0-1 form the P2; 2-3-4-5 is the P4.
inline Pattern p2_union_p4() { return {PatternKind::p2_union_p4, "P2uP4", disjoint_union(path_graph(2), path_graph(4))}; }
inline Pattern hvn() { return {PatternKind::hvn, "HVN", hvn_graph()}; }
inline Pattern p4() { return {PatternKind::p4, "P4", path_graph(4)}; }
inline Pattern p2_union_p3() { return {PatternKind::p2_union_p3, "P2uP3", disjoint_union(path_graph(2), path_graph(3))}; }
/// K4 minus the edge {0,1}.
inline Pattern diamond() {
  GraphBuilder b(complete_graph(4));
  b.remove_edge(0, 1);
  return {PatternKind::diamond, "diamond", std::move(b).build()};
}
inline Pattern complete(std::size_t t) {
  if (t > kMaxTemplateOrder) throw std::invalid_argument("pattern templates are limited to 6 vertices");
  return {PatternKind::complete, "K" + std::to_string(t), complete_graph(t)};
}
inline Pattern c5() { return {PatternKind::c5, "C5", cycle_graph(5)}; }

inline Pattern by_name(const std::string& name) {
  if (name == "P2uP4") return p2_union_p4();
  if (name == "HVN") return hvn();
  if (name == "P4") return p4();
  if (name == "P2uP3") return p2_union_p3();
  if (name == "diamond") return diamond();
  if (name == "C5") return c5();
  if (name.size() == 2 && name[0] == 'K' && name[1] >= '1' && name[1] <= '6')
    return complete(static_cast<std::size_t>(name[1] - '0'));
  throw std::invalid_argument("unknown pattern '" + name + "'");
}

}  // namespace patterns

/// An induced copy of a pattern: vertices[i] plays template vertex i.
struct Witness {
  std::string pattern;
  std::vector<Vertex> vertices;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Re-checks every pair of the listing against the template.
inline bool verify_witness(const Graph& g, const Pattern& p, const Witness& w) {
  if (w.vertices.size() != p.order()) return false;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (w.vertices[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < w.vertices.size(); ++j) {
      if (w.vertices[i] == w.vertices[j]) return false;
      if (g.adjacent(w.vertices[i], w.vertices[j]) != p.templ.adjacent(i, j)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Generic backtracking matcher for templates of at most six vertices.

using Assignment = std::pair<Vertex, Vertex>;  // (template vertex, graph vertex)

namespace detail {

inline void check_template(const Graph& templ) {
  if (templ.order() > kMaxTemplateOrder)
    throw std::invalid_argument("pattern templates are limited to 6 vertices, got " + std::to_string(templ.order()));
}

template <class F>
bool extend_embedding(const Graph& g, const Graph& t, const std::vector<Vertex>& order, std::size_t depth,
                      std::vector<Vertex>& image, VertexSet& used, const VertexSet& allowed, F& visit) {
  if (depth == order.size()) return visit(static_cast<const std::vector<Vertex>&>(image));
  const Vertex tv = order[depth];
  VertexSet cand = allowed - used;
  for (std::size_t e = 0; e < depth && !cand.empty(); ++e) {
    const Vertex te = order[e];
    if (t.adjacent(tv, te))
      cand &= g.neighbors(image[te]);
    else
      cand -= g.neighbors(image[te]);
  }
  for (Vertex v : cand) {
    image[tv] = v;
    used.insert(v);
    if (extend_embedding(g, t, order, depth + 1, image, used, allowed, visit)) return true;
    used.erase(v);
  }
  image[tv] = kNoVertex;
  return false;
}

}  // namespace detail

/// Calls visit(image) for every induced embedding of templ into g that agrees with
/// the fixed assignments and maps every other template vertex into `allowed`.
/// image[i] is the graph vertex playing template vertex i. Stops and returns true
/// as soon as visit returns true.
template <class F>
bool for_each_embedding(const Graph& g, const Graph& templ, const std::vector<Assignment>& fixed,
                        const VertexSet& allowed, F&& visit) {
  detail::check_template(templ);
  check_vertex_set(g, allowed);
  const std::size_t k = templ.order();
  std::vector<Vertex> image(k, kNoVertex);
  VertexSet used = g.empty_set();
  std::vector<Vertex> order;
  std::vector<bool> placed(k, false);
  for (auto [tv, gv] : fixed) {
    if (tv >= k || gv >= g.order() || placed[tv] || used.contains(gv)) return false;
    for (Vertex o : order)
      if (templ.adjacent(tv, o) != g.adjacent(gv, image[o])) return false;
    image[tv] = gv;
    used.insert(gv);
    placed[tv] = true;
    order.push_back(tv);
  }
  // Remaining template vertices: most constrained (most already-ordered neighbours) first.
  while (order.size() < k) {
    Vertex best = kNoVertex;
    std::size_t best_links = 0;
    for (Vertex tv = 0; tv < k; ++tv) {
      if (placed[tv]) continue;
      std::size_t links = 0;
      for (Vertex o : order) links += templ.adjacent(tv, o) ? 1 : 0;
      if (best == kNoVertex || links > best_links) {
        best = tv;
        best_links = links;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return detail::extend_embedding(g, templ, order, fixed.size(), image, used, allowed, visit);
}

/// First embedding found by the generic matcher, in its own search order.
inline std::optional<Witness> generic_find_any(const Graph& g, const Pattern& p) {
  std::optional<Witness> out;
  for_each_embedding(g, p.templ, {}, g.vertices(), [&](const std::vector<Vertex>& img) {
    out = Witness{p.name, img};
    return true;
  });
  return out;
}

namespace detail {

/// Is there an embedding whose image contains every vertex of `required` and whose
/// other vertices lie in `allowed`?
inline bool exists_through(const Graph& g, const Graph& templ, const std::vector<Vertex>& required,
                           const VertexSet& allowed) {
  std::vector<Assignment> fixed;
  std::vector<bool> taken(templ.order(), false);
  auto assign = [&](auto&& self, std::size_t i) -> bool {
    if (i == required.size())
      return for_each_embedding(g, templ, fixed, allowed, [](const std::vector<Vertex>&) { return true; });
    for (Vertex tv = 0; tv < templ.order(); ++tv) {
      if (taken[tv]) continue;
      bool ok = true;
      for (auto [fv, gv] : fixed)
        if (templ.adjacent(tv, fv) != g.adjacent(required[i], gv)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      taken[tv] = true;
      fixed.emplace_back(tv, required[i]);
      if (self(self, i + 1)) return true;
      fixed.pop_back();
      taken[tv] = false;
    }
    return false;
  };
  return assign(assign, 0);
}

}  // namespace detail

/// The induced copy whose sorted vertex set is lexicographically least; among the
/// embeddings onto that set, the lexicographically least listing.
inline std::optional<Witness> generic_find_least(const Graph& g, const Pattern& p) {
  detail::check_template(p.templ);
  const std::size_t n = g.order();
  const std::size_t k = p.order();
  if (n < k) return std::nullopt;
  std::vector<Vertex> chosen;
  Vertex lo = 0;
  for (std::size_t pos = 0; pos < k; ++pos) {
    bool found = false;
    for (Vertex t = lo; t < n; ++t) {
      chosen.push_back(t);
      if (detail::exists_through(g, p.templ, chosen, VertexSet::suffix(n, t + 1))) {
        lo = t + 1;
        found = true;
        break;
      }
      chosen.pop_back();
    }
    if (!found) return std::nullopt;
  }
  std::optional<std::vector<Vertex>> best;
  for_each_embedding(g, p.templ, {}, VertexSet::from_range(n, chosen), [&](const std::vector<Vertex>& img) {
    if (!best || img < *best) best = img;
    return false;
  });
  return Witness{p.name, *best};
}

// ---------------------------------------------------------------------------
// Specialised detectors; each returns some witness, listed in template order.

/// Induced P4 a-b-c-d, found by scanning the middle edge b-c.
inline std::optional<Witness> detect_p4(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 4) return std::nullopt;
  for (Vertex b = 0; b < n; ++b) {
    for (Vertex c = g.neighbors(b).next(b + 1); c != kNoVertex; c = g.neighbors(b).next(c + 1)) {
      VertexSet left = g.neighbors(b) - g.neighbors(c);
      left.erase(c);
      if (left.empty()) continue;
      VertexSet right = g.neighbors(c) - g.neighbors(b);
      right.erase(b);
      if (right.empty()) continue;
      for (Vertex a : left) {
        const Vertex d = (right - g.neighbors(a)).first();
        if (d != kNoVertex) return Witness{"P4", {a, b, c, d}};
      }
    }
  }
  return std::nullopt;
}

/// Calls f(w, x, y, z) for every K4 with w < x < y < z until f returns true.
template <class F>
bool for_each_k4(const Graph& g, F&& f) {
  const std::size_t n = g.order();
  for (Vertex w = 0; w < n; ++w) {
    const VertexSet nw = g.neighbors(w) & VertexSet::suffix(n, w + 1);
    for (Vertex x : nw) {
      const VertexSet nwx = nw & g.neighbors(x);
      for (Vertex y = nwx.next(x + 1); y != kNoVertex; y = nwx.next(y + 1)) {
        const VertexSet nwxy = nwx & g.neighbors(y);
        for (Vertex z = nwxy.next(y + 1); z != kNoVertex; z = nwxy.next(z + 1))
          if (f(w, x, y, z)) return true;
      }
    }
  }
  return false;
}

/// HVN as a K4 plus a vertex adjacent to exactly two of its vertices.
inline std::optional<Witness> detect_hvn(const Graph& g) {
  if (g.order() < 5) return std::nullopt;
  std::optional<Witness> out;
  for_each_k4(g, [&](Vertex w, Vertex x, Vertex y, Vertex z) {
    const Vertex q[4] = {w, x, y, z};
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        Vertex r = kNoVertex, s = kNoVertex;
        for (int t = 0; t < 4; ++t)
          if (t != i && t != j) (r == kNoVertex ? r : s) = q[t];
        const VertexSet cand = (g.neighbors(q[i]) & g.neighbors(q[j])) - g.neighbors(r) - g.neighbors(s);
        const Vertex v = cand.first();
        if (v != kNoVertex) {
          out = Witness{"HVN", {v, r, s, q[i], q[j]}};
          return true;
        }
      }
    }
    return false;
  });
  return out;
}

/// Every induced P4 a-b-c-d, each reported once; stops when f returns true.
template <class F>
bool for_each_p4(const Graph& g, F&& f) {
  const std::size_t n = g.order();
  for (Vertex b = 0; b < n; ++b) {
    for (Vertex c = g.neighbors(b).next(b + 1); c != kNoVertex; c = g.neighbors(b).next(c + 1)) {
      VertexSet left = g.neighbors(b) - g.neighbors(c);
      left.erase(c);
      if (left.empty()) continue;
      VertexSet right = g.neighbors(c) - g.neighbors(b);
      right.erase(b);
      if (right.empty()) continue;
      for (Vertex a : left) {
        const VertexSet ends = right - g.neighbors(a);
        for (Vertex d : ends)
          if (f(a, b, c, d)) return true;
      }
    }
  }
  return false;
}

/// P2 ∪ P4: an induced P4 plus an edge in the region anticomplete to it.
inline std::optional<Witness> detect_p2_union_p4(const Graph& g) {
  if (g.order() < 6) return std::nullopt;
  std::optional<Witness> out;
  for_each_p4(g, [&](Vertex a, Vertex b, Vertex c, Vertex d) {
    VertexSet free = g.vertices();
    for (Vertex v : {a, b, c, d}) {
      free -= g.neighbors(v);
      free.erase(v);
    }
    if (free.size() < 2) return false;
    for (Vertex e : free) {
      const Vertex f = (g.neighbors(e) & free).first();
      if (f != kNoVertex) {
        out = Witness{"P2uP4", {e, f, a, b, c, d}};
        return true;
      }
    }
    return false;
  });
  return out;
}

/// Fast search for any induced copy (specialised detector when one exists).
inline std::optional<Witness> find_any_induced(const Graph& g, const Pattern& p) {
  detail::check_template(p.templ);
  if (g.order() < p.order()) return std::nullopt;
  switch (p.kind) {
    case PatternKind::p4: return detect_p4(g);
    case PatternKind::hvn: return detect_hvn(g);
    case PatternKind::p2_union_p4: return detect_p2_union_p4(g);
    default: return generic_find_any(g, p);
  }
}

/// Lexicographically least induced copy of p in g, if any.
inline std::optional<Witness> find_induced(const Graph& g, const Pattern& p) {
  if (!find_any_induced(g, p)) return std::nullopt;
  return generic_find_least(g, p);
}

inline bool is_p4_free(const Graph& g) { return !detect_p4(g).has_value(); }

struct MembershipResult {
  bool member = true;
  std::optional<Witness> witness;
};

/// Fast membership test without a witness.
inline bool is_class_member_fast(const Graph& g) {
  return !detect_hvn(g) && !detect_p2_union_p4(g);
}

/// (P2 ∪ P4, HVN)-freeness. HVN is tested first; the witness is the least copy of
/// the first pattern found.
inline MembershipResult is_class_member(const Graph& g) {
  static const Pattern hvn = patterns::hvn();
  static const Pattern p2p4 = patterns::p2_union_p4();
  if (detect_hvn(g)) return {false, generic_find_least(g, hvn)};
  if (detect_p2_union_p4(g)) return {false, generic_find_least(g, p2p4)};
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Two cliques joined by a nonempty matching contain a P4.

enum class MatchingP4Failure { overlapping, not_cliques, sizes, not_matching, empty_matching };

class MatchingP4PreconditionError : public std::invalid_argument {
 public:
  MatchingP4PreconditionError(MatchingP4Failure reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}
  MatchingP4Failure reason() const { return reason_; }

 private:
  MatchingP4Failure reason_;
};

/// Builds the P4 (x2, x1, y1, y3) inside x ∪ y, where x1y1 is a cross edge and x2 ∈ x,
/// y3 ∈ y avoid it; y is taken to be the side with at least three vertices.
inline Witness matching_p4_check(const Graph& g, VertexSet x, VertexSet y) {
  using E = MatchingP4PreconditionError;
  check_vertex_set(g, x);
  check_vertex_set(g, y);
  if (x.intersects(y)) throw E(MatchingP4Failure::overlapping, "cliques must be disjoint");
  if (!is_clique(g, x) || !is_clique(g, y)) throw E(MatchingP4Failure::not_cliques, "both sets must be cliques");
  if (std::min(x.size(), y.size()) < 2 || std::max(x.size(), y.size()) < 3)
    throw E(MatchingP4Failure::sizes, "need min size >= 2 and max size >= 3");
  std::size_t cross = 0;
  for (Vertex v : x) {
    const auto d = g.neighbors(v).intersection_size(y);
    if (d > 1) throw E(MatchingP4Failure::not_matching, "vertex " + std::to_string(v) + " has two cross neighbours");
    cross += d;
  }
  for (Vertex v : y)
    if (g.neighbors(v).intersection_size(x) > 1)
      throw E(MatchingP4Failure::not_matching, "vertex " + std::to_string(v) + " has two cross neighbours");
  if (cross == 0) throw E(MatchingP4Failure::empty_matching, "cross edges form an empty matching");

  if (y.size() < 3) std::swap(x, y);
  Vertex x1 = kNoVertex, y1 = kNoVertex;
  for (Vertex v : x) {
    const Vertex u = (g.neighbors(v) & y).first();
    if (u != kNoVertex) {
      x1 = v;
      y1 = u;
      break;
    }
  }
  VertexSet rest_x = x;
  rest_x.erase(x1);
  const Vertex x2 = rest_x.first();
  VertexSet rest_y = y - g.neighbors(x2);
  rest_y.erase(y1);
  const auto options = rest_y.to_vector();
  // |y \ {y1}| >= 2 and x2 has at most one neighbour there.
  return Witness{"P4", {x2, x1, y1, options.back()}};
}

}  // namespace chibound
