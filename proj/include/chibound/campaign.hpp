#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "chibound/bounded_coloring.hpp"
#include "chibound/coloring.hpp"
#include "chibound/decomposition.hpp"
#include "chibound/formats.hpp"
#include "chibound/generators.hpp"
#include "chibound/patterns.hpp"
#include "chibound/records.hpp"

namespace chibound {

struct CampaignOptions {
  bool check_properties = true;
  bool random_representatives = true;
  bool oracle_verify = false;
  std::size_t oracle_max_n = 40;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t jobs = 1;
  std::size_t window = 256;
};

struct CampaignRecord {
  std::uint64_t hash = 0;
  std::string graph6;
  std::size_t n = 0;
  std::size_t m = 0;
  bool member = false;
  std::optional<Witness> witness;
  std::string status;
  int omega = -1;
  int k = -1;
  std::string branch;
  int colors_used = -1;
  int budget = -1;
  bool certified = true;
  std::optional<int> oracle_chi;
  bool oracle_exact = false;
  std::vector<Violation> violations;
};

namespace detail {

// Representatives drawn at random must also induce a matching between A and B.
inline std::optional<Violation> random_representative_check(const Graph& g, const Decomposition& d, std::uint64_t seed) {
  if (!d.b || d.split.trigger) return std::nullopt;
  std::mt19937_64 rng(seed);
  auto pick = [&](const PartiteCover& c) {
    VertexSet s = g.empty_set();
    for (const auto& p : c.parts) {
      auto v = p.to_vector();
      s.insert(v[uniform_below(rng, v.size())]);
    }
    return s;
  };
  const VertexSet ar = pick(d.a), br = pick(*d.b);
  for (Vertex v : ar)
    if (g.neighbors(v).intersection_size(br) > 1)
      return Violation{"representative-matching", "random A-representative has two B-representative neighbours", {v}};
  for (Vertex v : br)
    if (g.neighbors(v).intersection_size(ar) > 1)
      return Violation{"representative-matching", "random B-representative has two A-representative neighbours", {v}};
  return std::nullopt;
}

}  // namespace detail

/// Full pipeline on one graph. Failures become violations in the record.
inline CampaignRecord process_graph(const Graph& g, const CampaignOptions& opts) {
  CampaignRecord rec;
  rec.graph6 = write_graph6(g);
  rec.hash = graph_hash(g);
  rec.n = g.order();
  rec.m = g.edge_count();
  rec.member = is_class_member_fast(g);
  if (!rec.member) {
    rec.status = "skipped: non-member";
    rec.witness = is_class_member(g).witness;
    return rec;
  }
  BoundedColoringOptions bo;
  bo.verify_membership = false;
  bo.node_budget = opts.node_budget;
  try {
    auto res = color_class_member(g, bo);
    rec.omega = res.trace.omega;
    rec.k = res.trace.k;
    rec.branch = branch_name(res.trace.branch);
    rec.budget = res.trace.budget;
    rec.colors_used = res.coloring.colors_used();
    if (res.decomposition) {
      const auto& d = *res.decomposition;
      rec.certified = d.certified();
      if (opts.check_properties) {
        const auto report = check_properties(g, d);
        for (const auto& o : report.outcomes)
          if (o.applicable && !o.holds) rec.violations.push_back({o.name, o.detail, o.witness});
      }
      if (opts.random_representatives)
        if (auto v = detail::random_representative_check(g, d, rec.hash)) rec.violations.push_back(*v);
    }
    // Independent of the branch: properness and budget.
    if (!is_proper(g, res.coloring) || res.coloring.max_color() > rec.budget)
      rec.violations.push_back({"verified-colouring", "colouring improper or over budget", {}});
    if (opts.oracle_verify && g.order() <= opts.oracle_max_n) {
      const auto chi = chromatic_number(g, opts.node_budget);
      rec.oracle_exact = chi.exact;
      rec.oracle_chi = chi.chi;
      if (chi.exact && (chi.chi < rec.omega || chi.chi > rec.colors_used || chi.chi > rec.budget))
        rec.violations.push_back({"oracle-sandwich", "clique <= chi <= colours used <= budget fails", {}});
    }
  } catch (const BranchAssertionFailure& e) {
    rec.omega = e.trace.omega;
    rec.k = e.trace.k;
    rec.branch = branch_name(e.trace.branch);
    rec.budget = e.trace.budget;
    rec.violations.push_back(e.violation);
  } catch (const BudgetExceededError& e) {
    rec.omega = e.trace.omega;
    rec.branch = branch_name(e.trace.branch);
    rec.budget = e.trace.budget;
    rec.violations.push_back({"budget", e.what(), {}});
  }
  rec.status = rec.violations.empty() ? "ok" : "violation";
  return rec;
}

inline Json campaign_record_json(const CampaignRecord& r) {
  Json j;
  j["hash"] = r.hash;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["status"] = r.status;
  if (r.witness) {
    j["witness"] = Json{{"pattern", r.witness->pattern}, {"vertices", r.witness->vertices}};
    return j;
  }
  j["omega"] = r.omega;
  if (r.k >= 0) j["k"] = r.k;
  j["branch"] = r.branch;
  j["colors_used"] = r.colors_used;
  j["budget"] = r.budget;
  j["certified"] = r.certified;
  if (r.oracle_chi) {
    j["oracle_chi"] = *r.oracle_chi;
    j["oracle_exact"] = r.oracle_exact;
  }
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(violation_json(x));
  j["violations"] = std::move(v);
  return j;
}

struct CampaignSummary {
  std::size_t total = 0;
  std::size_t members = 0;
  std::size_t skipped = 0;
  std::size_t with_violations = 0;
  std::size_t uncertified = 0;
  std::size_t oracle_checked = 0;
  std::size_t oracle_exact = 0;
  std::map<std::string, std::size_t> by_branch;
  std::map<std::string, std::size_t> by_violation;

  void add(const CampaignRecord& r) {
    ++total;
    if (!r.member) {
      ++skipped;
      return;
    }
    ++members;
    ++by_branch[r.branch];
    if (!r.certified) ++uncertified;
    if (r.oracle_chi) {
      ++oracle_checked;
      if (r.oracle_exact) ++oracle_exact;
    }
    if (!r.violations.empty()) ++with_violations;
    for (const auto& v : r.violations) ++by_violation[v.check];
  }

  bool passed() const { return with_violations == 0; }
};

inline Json campaign_summary_json(const CampaignSummary& s) {
  Json j;
  j["total"] = s.total;
  j["members"] = s.members;
  j["skipped"] = s.skipped;
  j["with_violations"] = s.with_violations;
  j["uncertified"] = s.uncertified;
  j["oracle_checked"] = s.oracle_checked;
  j["oracle_exact"] = s.oracle_exact;
  j["by_branch"] = s.by_branch;
  j["by_violation"] = s.by_violation;
  return j;
}

/// Pulls graphs from `next` in fixed windows, processes each window on `jobs` workers,
/// and hands records to `sink` sorted by (hash, graph6) within the window. Window
/// boundaries depend only on input order, so the output does not depend on `jobs`.
inline CampaignSummary run_campaign(const std::function<std::optional<Graph>()>& next, const CampaignOptions& opts,
                                    const std::function<void(const CampaignRecord&)>& sink = {}) {
  CampaignSummary summary;
  const std::size_t window = std::max<std::size_t>(1, opts.window);
  const std::size_t jobs = std::max<std::size_t>(1, opts.jobs);
  bool more = true;
  while (more) {
    std::vector<Graph> batch;
    while (batch.size() < window) {
      auto g = next();
      if (!g) {
        more = false;
        break;
      }
      batch.push_back(std::move(*g));
    }
    if (batch.empty()) break;
    std::vector<CampaignRecord> recs(batch.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      for (std::size_t i; (i = cursor.fetch_add(1)) < batch.size();) recs[i] = process_graph(batch[i], opts);
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < std::min(jobs, batch.size()); ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    std::sort(recs.begin(), recs.end(), [](const CampaignRecord& a, const CampaignRecord& b) {
      return a.hash != b.hash ? a.hash < b.hash : a.graph6 < b.graph6;
    });
    for (const auto& r : recs) {
      summary.add(r);
      if (sink) sink(r);
    }
  }
  return summary;
}

}  // namespace chibound
