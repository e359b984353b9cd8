#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "chibound/bounded_coloring.hpp"
#include "chibound/coloring.hpp"
#include "chibound/decomposition.hpp"
#include "chibound/formats.hpp"
#include "chibound/graph.hpp"
#include "chibound/patterns.hpp"

namespace chibound {

// Key order matters for byte-identical output, hence ordered_json throughout.
using Json = nlohmann::ordered_json;

inline Json vertex_list_json(const VertexSet& s) { return Json(s.to_vector()); }

/// {"0":c0,"1":c1,...,"colors_used":k,"proper":b}
inline Json coloring_json(const Graph& g, const Coloring& c) {
  Json j = Json::object();
  for (Vertex v = 0; v < c.order(); ++v) j[std::to_string(v)] = c.color[v];
  j["colors_used"] = c.colors_used();
  j["proper"] = is_proper(g, c);
  return j;
}

inline Json witness_json(const Graph& g, const Witness& w) {
  Json j;
  j["pattern"] = w.pattern;
  j["vertices"] = w.vertices;
  j["verified"] = verify_witness(g, patterns::by_name(w.pattern), w);
  return j;
}

inline Json violation_json(const Violation& v) {
  Json j;
  j["check"] = v.check;
  j["detail"] = v.detail;
  j["witness"] = v.witness;
  return j;
}

inline Json trace_json(const BranchTrace& t) {
  Json j;
  j["branch"] = branch_name(t.branch);
  j["omega"] = t.omega;
  if (t.k >= 0) j["k"] = t.k;
  j["budget"] = t.budget;
  j["notes"] = t.notes;
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(Json{{"target", s.target}, {"palette", s.palette}, {"used", s.used}});
  j["steps"] = std::move(steps);
  Json hall = Json::array();
  for (const auto& h : t.hall) hall.push_back(Json{{"cells", h.cells}, {"colors", h.colors}});
  j["hall"] = std::move(hall);
  return j;
}

inline Json cover_json(const PartiteCover& c) {
  Json parts = Json::array();
  for (const auto& p : c.parts) parts.push_back(vertex_list_json(p));
  return Json{{"parts", parts}, {"certified", c.certified}, {"nodes", c.nodes}};
}

inline Json decomposition_json(const Decomposition& d) {
  Json j;
  j["omega"] = d.omega;
  j["k"] = d.k;
  j["A"] = cover_json(d.a);
  j["H"] = vertex_list_json(d.h);
  if (d.b) j["B"] = cover_json(*d.b);
  if (d.split.trigger)
    j["split_trigger"] = Json{{"vertex", d.split.trigger->vertex},
                              {"a_part", d.split.trigger->a_part},
                              {"b_parts", d.split.trigger->b_parts}};
  if (d.partition) {
    const auto& p = *d.partition;
    Json cells;
    cells["C0"] = vertex_list_json(p.c0);
    Json c = Json::array(), r = Json::array(), t = Json::array(), s = Json::array();
    for (const auto& x : p.c) c.push_back(vertex_list_json(x));
    for (const auto& x : p.r) r.push_back(vertex_list_json(x));
    for (const auto& x : p.t) t.push_back(vertex_list_json(x));
    for (const auto& row : p.s) {
      Json jr = Json::array();
      for (const auto& x : row) jr.push_back(vertex_list_json(x));
      s.push_back(std::move(jr));
    }
    cells["C"] = c;
    cells["R"] = r;
    cells["S"] = s;
    cells["T"] = t;
    cells["Z"] = vertex_list_json(p.z);
    cells["a_rep"] = p.a_rep;
    cells["b_rep"] = p.b_rep;
    j["partition"] = std::move(cells);
  }
  Json v = Json::array();
  for (const auto& x : d.violations) v.push_back(violation_json(x));
  j["violations"] = std::move(v);
  return j;
}

inline Json property_report_json(const PropertyReport& r) {
  Json arr = Json::array();
  for (const auto& o : r.outcomes) {
    Json j{{"name", o.name}, {"applicable", o.applicable}, {"holds", o.holds}};
    if (!o.holds) {
      j["detail"] = o.detail;
      j["witness"] = o.witness;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

/// Graph plus trace, enough to reproduce a failing run.
inline Json replay_bundle_json(const Graph& g, const BranchTrace& t, const Violation* v) {
  Json j;
  j["graph6"] = write_graph6(g);
  j["trace"] = trace_json(t);
  if (v) j["violation"] = violation_json(*v);
  return j;
}

}  // namespace chibound
