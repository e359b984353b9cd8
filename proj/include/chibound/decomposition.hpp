#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chibound/clique.hpp"
#include "chibound/cograph.hpp"
#include "chibound/graph.hpp"
#include "chibound/patterns.hpp"

namespace chibound {

/// A failed structural check with the vertices that exhibit it. These are results,
/// not aborts: on a genuine class member every one of them would be a counterexample.
struct Violation {
  std::string check;
  std::string detail;
  std::vector<Vertex> witness;
};

// ---------------------------------------------------------------------------
// Induced complete multipartite covers

struct PartiteCover {
  std::vector<VertexSet> parts;
  bool certified = false;  // proven to have maximum order
  std::uint64_t nodes = 0;

  std::size_t part_count() const { return parts.size(); }

  std::size_t order() const {
    std::size_t s = 0;
    for (const auto& p : parts) s += p.size();
    return s;
  }

  VertexSet vertices(std::size_t universe) const {
    VertexSet s(universe);
    for (const auto& p : parts) s |= p;
    return s;
  }

  /// Index of the part holding v, or -1.
  int part_of(Vertex v) const {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i].contains(v)) return static_cast<int>(i);
    return -1;
  }
};

class NoCoverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parts stable, pairwise complete, nonempty.
inline bool is_complete_multipartite(const Graph& g, const PartiteCover& c) {
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (c.parts[i].empty() || !is_stable(g, c.parts[i])) return false;
    for (std::size_t j = i + 1; j < c.parts.size(); ++j)
      if (!is_complete_between(g, c.parts[i], c.parts[j])) return false;
  }
  return true;
}

/// A vertex of `ground` outside the cover that could join some part (anticomplete to
/// that part, complete to all others), if any.
inline std::optional<std::pair<Vertex, std::size_t>> find_cover_extension(const Graph& g, const PartiteCover& c,
                                                                          const VertexSet& ground) {
  const VertexSet outside = ground - c.vertices(g.order());
  for (Vertex v : outside) {
    for (std::size_t j = 0; j < c.parts.size(); ++j) {
      if (g.neighbors(v).intersects(c.parts[j])) continue;
      bool ok = true;
      for (std::size_t l = 0; l < c.parts.size() && ok; ++l)
        if (l != j && !c.parts[l].is_subset_of(g.neighbors(v))) ok = false;
      if (ok) return std::pair{v, j};
    }
  }
  return std::nullopt;
}

namespace detail {

// Exact branch and bound. Vertices are decided in ascending order: join an existing
// part (in part order), open the next part, or stay out. Parts are therefore numbered
// by least vertex, and the first maximum-order cover reached is the lexicographically
// least assignment with "out" ranked after every part.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, const VertexSet& ground, std::size_t parts, std::uint64_t budget)
      : g_(g), order_(ground.to_vector()), p_(parts), budget_(budget), rest_(ground) {
    members_.assign(p_, g.empty_set());
    common_.assign(p_, g.vertices());
    anti_.assign(p_, g.vertices());
  }

  /// Exhaustive search keeping only covers of order >= floor_order.
  bool run(std::size_t floor_order) {
    target_ = floor_order;
    recurse(0);
    return !aborted_;
  }

  const std::optional<std::vector<VertexSet>>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void recurse(std::size_t idx) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (used_ == p_ && assigned_ >= target_ && idx == order_.size()) {
      best_ = members_;
      target_ = assigned_ + 1;
      return;
    }
    if (idx == order_.size()) return;

    // Vertices adjacent to everything assigned so far (candidates for a new part).
    VertexSet all_adj = g_.vertices();
    for (std::size_t j = 0; j < used_; ++j) all_adj &= common_[j];
    // cand_j = anti_j ∩ (∩_{l≠j} common_l), via prefix/suffix intersections.
    std::vector<VertexSet> cand(used_, g_.empty_set());
    {
      VertexSet prefix = g_.vertices();
      for (std::size_t j = 0; j < used_; ++j) {
        cand[j] = prefix;
        prefix &= common_[j];
      }
      VertexSet suffix = g_.vertices();
      for (std::size_t j = used_; j-- > 0;) {
        cand[j] &= suffix;
        cand[j] &= anti_[j];
        cand[j] &= rest_;
        suffix &= common_[j];
      }
    }
    VertexSet fresh = all_adj & rest_;
    VertexSet feasible = used_ < p_ ? fresh : g_.empty_set();
    for (const auto& c : cand) feasible |= c;
    if (assigned_ + feasible.size() < target_) return;
    if (used_ < p_ && fresh.size() < p_ - used_) return;

    const Vertex v = order_[idx];
    rest_.erase(v);
    for (std::size_t j = 0; j < used_; ++j)
      if (cand[j].contains(v)) place(v, j, idx);
    if (used_ < p_ && fresh.contains(v)) {
      ++used_;
      place(v, used_ - 1, idx);
      --used_;
    }
    recurse(idx + 1);
    rest_.insert(v);
  }

  void place(Vertex v, std::size_t j, std::size_t idx) {
    const VertexSet common = common_[j];
    const VertexSet anti = anti_[j];
    members_[j].insert(v);
    common_[j] &= g_.neighbors(v);
    anti_[j] -= g_.neighbors(v);
    ++assigned_;
    recurse(idx + 1);
    --assigned_;
    members_[j].erase(v);
    common_[j] = common;
    anti_[j] = anti;
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::size_t p_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  VertexSet rest_;
  std::vector<VertexSet> members_, common_, anti_;
  std::size_t used_ = 0, assigned_ = 0, target_ = 0;
  std::optional<std::vector<VertexSet>> best_;
};

}  // namespace detail

inline constexpr std::uint64_t kDefaultCoverBudget = 50'000'000;

/// Single-vertex extensions from a seed until none applies. The result is maximal
/// but not necessarily of maximum order.
inline PartiteCover greedy_extend_cover(const Graph& g, PartiteCover cover, const VertexSet& ground) {
  while (auto ext = find_cover_extension(g, cover, ground)) cover.parts[ext->second].insert(ext->first);
  cover.certified = false;
  return cover;
}

/// Maximum-order induced complete multipartite subgraph of g[ground] with exactly
/// `parts_required` parts. Exhaustive unless the node budget runs out, in which case
/// the best cover seen (or the clique seed) is greedily extended and left uncertified.
inline PartiteCover max_complete_multipartite(const Graph& g, std::size_t parts_required, const VertexSet& ground,
                                              std::uint64_t node_budget = kDefaultCoverBudget) {
  check_vertex_set(g, ground);
  PartiteCover out;
  if (parts_required == 0) {
    out.certified = true;
    return out;
  }
  const auto clique = clique_number_in(g, ground);
  if (clique.size < parts_required)
    throw NoCoverError("no complete " + std::to_string(parts_required) + "-partite subgraph: clique number is " +
                       std::to_string(clique.size));
  detail::CoverSearch search(g, ground, parts_required, node_budget);
  const bool finished = search.run(parts_required);
  out.nodes = search.nodes();
  if (search.best()) {
    out.parts = *search.best();
  } else {
    // Budget ran out before any cover was recorded: seed from the clique.
    for (Vertex v : clique.witness) {
      if (out.parts.size() == parts_required) break;
      out.parts.push_back(VertexSet(g.order(), {v}));
    }
  }
  if (finished) {
    out.certified = true;
    return out;
  }
  auto extended = greedy_extend_cover(g, std::move(out), ground);
  extended.nodes = search.nodes();
  return extended;
}

inline PartiteCover max_complete_multipartite(const Graph& g, std::size_t parts_required) {
  return max_complete_multipartite(g, parts_required, g.vertices());
}

// ---------------------------------------------------------------------------
// Partition of the vertices outside the covers

/// Indices of the cover parts that meet N(v).
inline std::vector<std::size_t> parts_hit(const Graph& g, const PartiteCover& c, Vertex v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.parts.size(); ++i)
    if (g.neighbors(v).intersects(c.parts[i])) out.push_back(i);
  return out;
}

/// Vertices of H grouped by the single part of A their neighbourhood meets.
struct ByAPartition {
  VertexSet unattached;           // no neighbour in A
  std::vector<VertexSet> by_part;  // neighbours only in part i
  std::vector<Violation> violations;
};

inline ByAPartition partition_by_a(const Graph& g, const PartiteCover& a, const VertexSet& h) {
  ByAPartition out{g.empty_set(), std::vector<VertexSet>(a.parts.size(), g.empty_set()), {}};
  for (Vertex v : h) {
    const auto hit = parts_hit(g, a, v);
    if (hit.empty()) {
      out.unattached.insert(v);
    } else if (hit.size() == 1) {
      out.by_part[hit[0]].insert(v);
    } else {
      Violation viol{"h-vertex-sees-one-a-part",
                     "vertex " + std::to_string(v) + " has neighbours in parts " + std::to_string(hit[0]) + " and " +
                         std::to_string(hit[1]) + " of A",
                     {v}};
      viol.witness.push_back((g.neighbors(v) & a.parts[hit[0]]).first());
      viol.witness.push_back((g.neighbors(v) & a.parts[hit[1]]).first());
      out.violations.push_back(std::move(viol));
    }
  }
  return out;
}

/// The full grid over V(H) \ V(B): rows are A-parts, columns B-parts.
struct ClassPartition {
  std::size_t omega = 0, k = 0;
  VertexSet a_vertices, b_vertices, h_vertices, outside_b;  // outside_b = V(H) \ V(B)
  VertexSet c0;                                             // V(H) with no A-neighbour
  std::vector<VertexSet> c;                                 // V(H) seeing only A-part i
  std::vector<VertexSet> r;                                 // only B-part j
  std::vector<std::vector<VertexSet>> s;                    // s[i][j]: A-part i and B-part j
  std::vector<VertexSet> t;                                 // only A-part i
  VertexSet z;                                              // neither
  std::vector<Vertex> a_rep, b_rep;                         // least vertex of each part
  VertexSet s_prime;                                        // union of the stable s-cells
  std::vector<Violation> violations;

  VertexSet r_union() const { return union_of(r); }
  VertexSet t_union() const { return union_of(t); }
  VertexSet s_union() const {
    VertexSet u = z - z;
    for (const auto& row : s) u |= union_of(row);
    return u;
  }

 private:
  VertexSet union_of(const std::vector<VertexSet>& xs) const {
    VertexSet u = z - z;
    for (const auto& x : xs) u |= x;
    return u;
  }
};

inline ClassPartition partition_by_b(const Graph& g, const PartiteCover& a, const PartiteCover& b, const VertexSet& h) {
  ClassPartition p;
  p.omega = a.parts.size();
  p.k = b.parts.size();
  p.a_vertices = a.vertices(g.order());
  p.b_vertices = b.vertices(g.order());
  p.h_vertices = h;
  p.outside_b = h - p.b_vertices;
  auto by_a = partition_by_a(g, a, h);
  p.c0 = by_a.unattached;
  p.c = std::move(by_a.by_part);
  p.violations = std::move(by_a.violations);
  p.r.assign(p.k, g.empty_set());
  p.t.assign(p.omega, g.empty_set());
  p.s.assign(p.omega, std::vector<VertexSet>(p.k, g.empty_set()));
  p.z = g.empty_set();
  for (const auto& part : a.parts) p.a_rep.push_back(part.first());
  for (const auto& part : b.parts) p.b_rep.push_back(part.first());

  for (Vertex v : p.outside_b) {
    const auto ha = parts_hit(g, a, v);
    const auto hb = parts_hit(g, b, v);
    if (ha.size() > 1) continue;  // already reported
    if (hb.size() > 1) {
      Violation viol{"outside-vertex-sees-one-b-part",
                     "vertex " + std::to_string(v) + " has neighbours in parts " + std::to_string(hb[0]) + " and " +
                         std::to_string(hb[1]) + " of B",
                     {v}};
      viol.witness.push_back((g.neighbors(v) & b.parts[hb[0]]).first());
      viol.witness.push_back((g.neighbors(v) & b.parts[hb[1]]).first());
      p.violations.push_back(std::move(viol));
      continue;
    }
    if (ha.empty() && hb.empty())
      p.z.insert(v);
    else if (ha.empty())
      p.r[hb[0]].insert(v);
    else if (hb.empty())
      p.t[ha[0]].insert(v);
    else
      p.s[ha[0]][hb[0]].insert(v);
  }
  p.s_prime = g.empty_set();
  for (const auto& row : p.s)
    for (const auto& cell : row)
      if (is_stable(g, cell)) p.s_prime |= cell;
  return p;
}

// ---------------------------------------------------------------------------
// A vertex of A whose B-neighbourhood spans two parts of B

struct SplitTrigger {
  Vertex vertex = kNoVertex;
  std::size_t a_part = 0;
  std::vector<std::size_t> b_parts;
};

struct SplitCheck {
  std::optional<SplitTrigger> trigger;
  bool representative_matching = true;  // meaningful when no trigger
  std::optional<Violation> violation;
};

/// Returns the least A-vertex seeing two B-parts. Without one, also confirms that the
/// A-representatives and B-representatives induce a matching.
inline SplitCheck claim_split_applies(const Graph& g, const PartiteCover& a, const PartiteCover& b) {
  SplitCheck out;
  VertexSet av = a.vertices(g.order());
  for (Vertex v : av) {
    auto hit = parts_hit(g, b, v);
    if (hit.size() >= 2) {
      out.trigger = SplitTrigger{v, static_cast<std::size_t>(a.part_of(v)), std::move(hit)};
      return out;
    }
  }
  VertexSet arep = g.empty_set(), brep = g.empty_set();
  for (const auto& p : a.parts) arep.insert(p.first());
  for (const auto& p : b.parts) brep.insert(p.first());
  for (Vertex v : arep) {
    if (g.neighbors(v).intersection_size(brep) > 1) {
      out.representative_matching = false;
      out.violation = Violation{"representative-matching", "A-representative has two B-representative neighbours", {v}};
      return out;
    }
  }
  for (Vertex v : brep) {
    if (g.neighbors(v).intersection_size(arep) > 1) {
      out.representative_matching = false;
      out.violation = Violation{"representative-matching", "B-representative has two A-representative neighbours", {v}};
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Whole decomposition

struct DecompositionOptions {
  std::uint64_t cover_budget = kDefaultCoverBudget;
};

struct Decomposition {
  std::size_t omega = 0;
  PartiteCover a;
  VertexSet h;
  std::size_t k = 0;
  ByAPartition by_a;
  std::optional<PartiteCover> b;
  SplitCheck split;
  std::optional<ClassPartition> partition;  // present when k >= 4
  std::vector<Violation> violations;

  bool certified() const { return a.certified && (!b || b->certified); }
};

inline Decomposition decompose(const Graph& g, const DecompositionOptions& opts = {}) {
  Decomposition d;
  const auto cl = clique_number(g);
  d.omega = cl.size;
  if (d.omega < 4) throw std::invalid_argument("decomposition needs clique number at least 4");
  d.a = max_complete_multipartite(g, d.omega, g.vertices(), opts.cover_budget);
  if (auto ext = find_cover_extension(g, d.a, g.vertices()))
    d.violations.push_back({"a-cover-maximal", "vertex extends the A cover", {ext->first}});
  d.h = g.vertices() - d.a.vertices(g.order());
  d.by_a = partition_by_a(g, d.a, d.h);
  for (const auto& v : d.by_a.violations) d.violations.push_back(v);
  d.k = clique_number_in(g, d.h).size;
  if (d.k > d.omega) d.violations.push_back({"k-at-most-omega", "H has a larger clique than G", {}});
  if (d.k < 4) return d;
  d.b = max_complete_multipartite(g, d.k, d.h, opts.cover_budget);
  if (auto ext = find_cover_extension(g, *d.b, d.h))
    d.violations.push_back({"b-cover-maximal", "vertex extends the B cover", {ext->first}});
  d.split = claim_split_applies(g, d.a, *d.b);
  if (d.split.violation) d.violations.push_back(*d.split.violation);
  d.partition = partition_by_b(g, d.a, *d.b, d.h);
  for (const auto& v : d.partition->violations)
    if (v.check != "h-vertex-sees-one-a-part") d.violations.push_back(v);
  return d;
}

// ---------------------------------------------------------------------------
// Executable structural properties of the partition

struct PropertyOutcome {
  std::string name;
  bool applicable = false;
  bool holds = true;
  std::string detail;
  std::vector<Vertex> witness;
};

struct PropertyReport {
  std::vector<PropertyOutcome> outcomes;

  bool all_hold() const {
    for (const auto& o : outcomes)
      if (o.applicable && !o.holds) return false;
    return true;
  }

  const PropertyOutcome* find(const std::string& name) const {
    for (const auto& o : outcomes)
      if (o.name == name) return &o;
    return nullptr;
  }
};

namespace detail {

struct PropertyBuilder {
  const Graph& g;
  PropertyOutcome cur;

  void start(std::string name, bool applicable) {
    cur = PropertyOutcome{std::move(name), applicable, true, {}, {}};
  }

  /// Records the first edge between x and y as a failure.
  void anticomplete(const VertexSet& x, const VertexSet& y, const std::string& what) {
    if (!cur.applicable || !cur.holds) return;
    if (auto e = find_edge_between(g, x, y)) {
      cur.holds = false;
      cur.detail = what;
      cur.witness = {e->first, e->second};
    }
  }

  void stable(const VertexSet& x, const std::string& what) { anticomplete(x, x, what); }

  PropertyOutcome done() { return std::move(cur); }
};

inline std::string cell_name(std::size_t i, std::size_t j) {
  return "S[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

}  // namespace detail

/// Parts of A and B met by N(x) ∪ N(y).
inline std::size_t joint_parts_hit(const Graph& g, const PartiteCover& a, const PartiteCover& b, Vertex x, Vertex y) {
  const VertexSet n = g.neighbors(x) | g.neighbors(y);
  std::size_t c = 0;
  for (const auto& p : a.parts) c += n.intersects(p) ? 1 : 0;
  for (const auto& p : b.parts) c += n.intersects(p) ? 1 : 0;
  return c;
}

class ClaimPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two outside vertices with different attachments to A ∪ B that together meet at
/// most three parts must be non-adjacent. Returns whether x ≁ y.
inline bool claim_distinct_attachment_check(const Graph& g, const PartiteCover& a, const PartiteCover& b,
                                            const ClassPartition& p, Vertex x, Vertex y) {
  if (!p.outside_b.contains(x) || !p.outside_b.contains(y))
    throw ClaimPreconditionError("both vertices must lie outside A and B");
  const VertexSet ab = p.a_vertices | p.b_vertices;
  if ((g.neighbors(x) & ab) == (g.neighbors(y) & ab))
    throw ClaimPreconditionError("vertices have the same neighbourhood in A ∪ B");
  if (joint_parts_hit(g, a, b, x, y) > 3) throw ClaimPreconditionError("joint neighbourhood meets more than three parts");
  return !g.adjacent(x, y);
}

/// Evaluates every structural property that applies to this decomposition.
inline PropertyReport check_properties(const Graph& g, const Decomposition& d) {
  PropertyReport rep;
  if (!d.partition || !d.b) return rep;
  const auto& p = *d.partition;
  const auto& a = d.a;
  const auto& b = *d.b;
  const std::size_t w = p.omega, k = p.k;
  const bool base = !d.split.trigger;  // the properties assume no A vertex sees two B parts
  const VertexSet R = p.r_union(), S = p.s_union(), T = p.t_union(), Z = p.z;
  detail::PropertyBuilder pb{g, {}};

  // Each cell of the grid induces a P4-free graph.
  {
    PropertyOutcome o{"cells-p4-free", true, true, {}, {}};
    auto check = [&](const VertexSet& cell, const std::string& nm) {
      if (!o.holds) return;
      if (auto wit = detect_p4(induced_subgraph(g, cell))) {
        const auto members = cell.to_vector();
        o.holds = false;
        o.detail = nm + " contains an induced P4";
        for (auto v : wit->vertices) o.witness.push_back(members[v]);
      }
    };
    for (std::size_t j = 0; j < k; ++j) check(p.r[j], "R[" + std::to_string(j) + "]");
    for (std::size_t i = 0; i < w; ++i) check(p.t[i], "T[" + std::to_string(i) + "]");
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < k; ++j) check(p.s[i][j], detail::cell_name(i, j));
    check(Z, "Z");
    rep.outcomes.push_back(std::move(o));
  }

  pb.start("z-anticomplete-to-rst", base);
  pb.anticomplete(Z, R | S | T, "Z meets R ∪ S ∪ T");
  rep.outcomes.push_back(pb.done());

  pb.start("r-cells-isolated", base);
  pb.anticomplete(R, S | T | Z, "R meets S ∪ T ∪ Z");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      pb.anticomplete(p.r[i], p.r[j], "R[" + std::to_string(i) + "] meets R[" + std::to_string(j) + "]");
  rep.outcomes.push_back(pb.done());

  pb.start("t-cells-isolated", base);
  pb.anticomplete(T, R | S | Z, "T meets R ∪ S ∪ Z");
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = i + 1; j < w; ++j)
      pb.anticomplete(p.t[i], p.t[j], "T[" + std::to_string(i) + "] meets T[" + std::to_string(j) + "]");
  rep.outcomes.push_back(pb.done());

  pb.start("s-cells-row-column", base);
  pb.anticomplete(S, R | T | Z, "S meets R ∪ T ∪ Z");
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t q1 = 0; q1 < k; ++q1)
      for (std::size_t q2 = q1 + 1; q2 < k; ++q2)
        pb.anticomplete(p.s[i][q1], p.s[i][q2], detail::cell_name(i, q1) + " meets " + detail::cell_name(i, q2));
  for (std::size_t q = 0; q < k; ++q)
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = i + 1; j < w; ++j)
        pb.anticomplete(p.s[i][q], p.s[j][q], detail::cell_name(i, q) + " meets " + detail::cell_name(j, q));
  rep.outcomes.push_back(pb.done());

  pb.start("nonstable-cell-separates", base);
  for (std::size_t i = 0; i < w; ++i) {
    for (std::size_t q = 0; q < k; ++q) {
      if (is_stable(g, p.s[i][q])) continue;
      VertexSet other_a = p.a_vertices - a.parts[i];
      VertexSet other_b = p.b_vertices - b.parts[q];
      pb.anticomplete(other_a, other_b,
                      "A minus part " + std::to_string(i) + " meets B minus part " + std::to_string(q));
      for (std::size_t j = 0; j < w; ++j)
        for (std::size_t q2 = 0; q2 < k; ++q2)
          if (j != i && q2 != q)
            pb.anticomplete(p.s[i][q], p.s[j][q2],
                            "non-stable " + detail::cell_name(i, q) + " meets " + detail::cell_name(j, q2));
    }
  }
  rep.outcomes.push_back(pb.done());

  pb.start("omega4-cross-cells", base && w == 4);
  if (w == 4) {
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < w; ++j)
        for (std::size_t q1 = 0; q1 < k; ++q1)
          for (std::size_t q2 = 0; q2 < k; ++q2) {
            if (i == j || q1 == q2) continue;
            if (!find_edge_between(g, p.s[i][q1], p.s[j][q2])) continue;
            for (std::size_t q3 = 0; q3 < k; ++q3)
              if (q3 != q1 && q3 != q2)
                pb.anticomplete(p.s[i][q1], p.s[j][q3],
                                detail::cell_name(i, q1) + " meets both " + detail::cell_name(j, q2) + " and " +
                                    detail::cell_name(j, q3));
            for (std::size_t j3 = 0; j3 < w; ++j3)
              if (j3 != i && j3 != j)
                pb.anticomplete(p.s[i][q1], p.s[j3][q2],
                                detail::cell_name(i, q1) + " meets both " + detail::cell_name(j, q2) + " and " +
                                    detail::cell_name(j3, q2));
          }
  }
  rep.outcomes.push_back(pb.done());

  {
    PropertyOutcome o{"omega4-stable-components", base && w == 4, true, {}, {}};
    if (o.applicable) {
      for (const auto& comp : components(g, p.s_prime)) {
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t i = 0; i < w; ++i)
          for (std::size_t j = 0; j < k; ++j)
            if (comp.intersects(p.s[i][j])) cells.emplace_back(i, j);
        bool ok = cells.size() <= 4;
        for (std::size_t x = 0; x < cells.size() && ok; ++x)
          for (std::size_t y = x + 1; y < cells.size() && ok; ++y)
            if (cells[x].first == cells[y].first || cells[x].second == cells[y].second) ok = false;
        if (!ok) {
          o.holds = false;
          o.detail = "component of the stable cells spans " + std::to_string(cells.size()) +
                     " cells without distinct rows and columns";
          o.witness = comp.to_vector();
          break;
        }
      }
    }
    rep.outcomes.push_back(std::move(o));
  }

  pb.start("omega5-cross-cells", base && w >= 5);
  if (w >= 5)
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < w; ++j)
        for (std::size_t q1 = 0; q1 < k; ++q1)
          for (std::size_t q2 = 0; q2 < k; ++q2)
            if (i != j && q1 != q2)
              pb.anticomplete(p.s[i][q1], p.s[j][q2], detail::cell_name(i, q1) + " meets " + detail::cell_name(j, q2));
  rep.outcomes.push_back(pb.done());

  {
    PropertyOutcome o{"distinct-attachment-nonadjacent", base, true, {}, {}};
    if (base) {
      const VertexSet ab = p.a_vertices | p.b_vertices;
      for (Vertex x : p.outside_b) {
        for (Vertex y : g.neighbors(x) & p.outside_b) {
          if (y <= x) continue;
          if ((g.neighbors(x) & ab) == (g.neighbors(y) & ab)) continue;
          if (joint_parts_hit(g, a, b, x, y) > 3) continue;
          o.holds = false;
          o.detail = "adjacent outside vertices with distinct attachments meeting at most three parts";
          o.witness = {x, y};
          break;
        }
        if (!o.holds) break;
      }
    }
    rep.outcomes.push_back(std::move(o));
  }
  return rep;
}

}  // namespace chibound
