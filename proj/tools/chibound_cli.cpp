// chibound: membership checks, bounded colouring, generators and campaigns.
//
// Exit codes
//   0  success (check: member; campaign: no violations)
//   1  input is not a class member (check, color) or campaign found violations
//   2  I/O, parse or parameter error
//   3  branch assertion failure during colouring (replay bundle printed)
//   4  colouring exceeded its budget

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chibound/chibound.hpp"

namespace cb = chibound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitIo = 2;
constexpr int kExitBranch = 3;
constexpr int kExitBudget = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("CHIBOUND_NODE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed CHIBOUND_NODE_BUDGET\n";
    }
  }
  return cb::kDefaultNodeBudget;
}

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

cb::GraphFormat resolve_format(const std::string& flag, const std::string& path) {
  if (!flag.empty()) return cb::parse_format_name(flag);
  if (ends_with(path, ".col") || ends_with(path, ".dimacs")) return cb::GraphFormat::dimacs;
  if (ends_with(path, ".edges") || ends_with(path, ".txt")) return cb::GraphFormat::edges;
  return cb::GraphFormat::graph6;
}

std::vector<std::string> graph6_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

cb::Graph read_single(const std::string& path, const std::string& format_flag) {
  const auto text = read_all(path);
  const auto fmt = resolve_format(format_flag, path);
  if (fmt == cb::GraphFormat::graph6) {
    const auto lines = graph6_lines(text);
    if (lines.size() != 1)
      throw cb::FormatError("expected exactly one graph6 line, found " + std::to_string(lines.size()), 0);
    return cb::read_graph6(lines.front());
  }
  return cb::read_graph(text, fmt);
}

// Output goes to --out when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw IoError("cannot write " + path);
    }
  }
  std::ostream& os() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct CommonFlags {
  std::string format;
  std::string out;
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_option("--format", f.format, "graph6, dimacs or edges")
      ->check(CLI::IsMember({"graph6", "g6", "dimacs", "col", "edges", "edgelist"}));
  app->add_option("--out", f.out, "write output to this file");
}

std::optional<cb::Graph> draw_sample(const std::string& model, std::size_t n, std::optional<double> density,
                                     std::mt19937_64& master) {
  const std::uint64_t seed = master();
  // Without a fixed density each graph draws its own, spreading the distribution.
  const double p = density ? *density : 0.05 + 0.9 * cb::uniform_unit(master);
  if (model == "gnp") return cb::sample_class_member(n, p, seed);
  if (model == "planted") return cb::sample_planted_member(n, p, seed);
  // mixed: alternate
  return (seed & 1) ? cb::sample_planted_member(n, p, seed) : cb::sample_class_member(n, p, seed);
}

int cmd_check(const std::string& input, const CommonFlags& f) {
  const auto g = read_single(input, f.format);
  Output out(f.out);
  const auto res = cb::is_class_member(g);
  cb::Json j;
  j["member"] = res.member;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  if (res.witness) j["witness"] = cb::witness_json(g, *res.witness);
  out.os() << j.dump() << "\n";
  return res.member ? kExitOk : kExitNegative;
}

int cmd_color(const std::string& input, const CommonFlags& f, bool explain, bool oracle, std::uint64_t budget) {
  const auto g = read_single(input, f.format);
  Output out(f.out);
  cb::BoundedColoringOptions opts;
  opts.node_budget = budget;
  try {
    const auto res = cb::color_class_member(g, opts);
    cb::Json j;
    j["n"] = g.order();
    j["omega"] = res.trace.omega;
    j["budget"] = res.trace.budget;
    j["branch"] = cb::branch_name(res.trace.branch);
    j["coloring"] = cb::coloring_json(g, res.coloring);
    if (explain) {
      j["trace"] = cb::trace_json(res.trace);
      if (res.decomposition) j["decomposition"] = cb::decomposition_json(*res.decomposition);
    }
    if (oracle) {
      const auto chi = cb::chromatic_number(g, budget);
      const bool sandwich = res.trace.omega <= chi.chi && chi.chi <= res.coloring.colors_used() &&
                            res.coloring.colors_used() <= res.trace.budget;
      j["oracle"] = cb::Json{{"chi", chi.chi}, {"exact", chi.exact}, {"lower_bound", chi.lower_bound},
                             {"nodes", chi.nodes}, {"sandwich", chi.exact ? sandwich : false}};
    }
    out.os() << j.dump() << "\n";
    return kExitOk;
  } catch (const cb::NotClassMemberError& e) {
    out.os() << cb::Json{{"member", false}, {"witness", cb::witness_json(g, e.witness)}}.dump() << "\n";
    return kExitNegative;
  } catch (const cb::BranchAssertionFailure& e) {
    out.os() << cb::replay_bundle_json(g, e.trace, &e.violation).dump() << "\n";
    std::cerr << "branch assertion failure: " << e.what() << "\n";
    return kExitBranch;
  } catch (const cb::BudgetExceededError& e) {
    out.os() << cb::replay_bundle_json(g, e.trace, nullptr).dump() << "\n";
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  }
}

int cmd_extremal(int omega, const CommonFlags& f) {
  if (omega < 4) throw CLI::ValidationError("omega", "must be at least 4");
  Output out(f.out);
  const auto fmt = f.format.empty() ? cb::GraphFormat::graph6 : cb::parse_format_name(f.format);
  const auto text = cb::write_graph(cb::extremal(omega), fmt);
  out.os() << text;
  if (fmt == cb::GraphFormat::graph6) out.os() << "\n";
  return kExitOk;
}

void require_graph6(const CommonFlags& f) {
  if (!f.format.empty() && cb::parse_format_name(f.format) != cb::GraphFormat::graph6)
    throw CLI::ValidationError("--format", "streams are written as graph6 only");
}

int cmd_sample(std::size_t n, std::optional<double> density, std::uint64_t seed, std::size_t count,
               const std::string& model, const CommonFlags& f) {
  require_graph6(f);
  Output out(f.out);
  std::mt19937_64 master(seed);
  for (std::size_t i = 0; i < count; ++i) out.os() << cb::write_graph6(*draw_sample(model, n, density, master)) << "\n";
  return kExitOk;
}

int cmd_enumerate(std::size_t n, bool members, bool dedup, const CommonFlags& f) {
  require_graph6(f);
  if (n > cb::kMaxEnumerationOrder) throw CLI::ValidationError("n", "at most 7");
  Output out(f.out);
  auto emit = [&](const cb::Graph& g) { out.os() << cb::write_graph6(g) << "\n"; };
  if (members || dedup)
    cb::enumerate_class_members(n, dedup, emit);
  else
    cb::for_each_labeled_graph(n, emit);
  return kExitOk;
}

struct CampaignFlags {
  std::string input;
  std::optional<std::size_t> enumerate_n;
  std::optional<std::size_t> sample_n;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::optional<double> density;
  std::string model = "mixed";
  bool oracle = false;
  std::size_t oracle_max_n = 40;
  std::size_t jobs = 1;
  std::size_t window = 256;
  bool records = false;
  bool no_properties = false;
};

int cmd_campaign(const CampaignFlags& c, const CommonFlags& f, std::uint64_t budget) {
  Output out(f.out);
  cb::CampaignOptions opts;
  opts.oracle_verify = c.oracle;
  opts.oracle_max_n = c.oracle_max_n;
  opts.node_budget = budget;
  opts.jobs = c.jobs;
  opts.window = c.window;
  opts.check_properties = !c.no_properties;

  std::function<std::optional<cb::Graph>()> next;
  std::vector<std::string> lines;
  std::size_t cursor = 0;
  std::uint64_t mask = 0;
  std::mt19937_64 master(c.seed);
  int sources = (c.enumerate_n ? 1 : 0) + (c.sample_n ? 1 : 0) + (c.input.empty() ? 0 : 1);
  if (sources != 1) throw CLI::ValidationError("source", "give exactly one of INPUT, --enumerate, --sample");
  if (c.enumerate_n) {
    const std::size_t n = *c.enumerate_n;
    if (n > cb::kMaxEnumerationOrder) throw CLI::ValidationError("--enumerate", "at most 7");
    const std::uint64_t total = std::uint64_t{1} << cb::pair_count(n);
    next = [&, n, total]() -> std::optional<cb::Graph> {
      while (mask < total) {
        auto g = cb::graph_from_mask(n, mask++);
        if (cb::is_class_member_fast(g)) return g;
      }
      return std::nullopt;
    };
  } else if (c.sample_n) {
    next = [&]() -> std::optional<cb::Graph> {
      if (cursor++ >= c.count) return std::nullopt;
      return draw_sample(c.model, *c.sample_n, c.density, master);
    };
  } else {
    if (resolve_format(f.format, c.input) != cb::GraphFormat::graph6)
      throw CLI::ValidationError("--format", "campaign input must be a graph6 stream");
    lines = graph6_lines(read_all(c.input));
    next = [&]() -> std::optional<cb::Graph> {
      if (cursor >= lines.size()) return std::nullopt;
      const std::size_t at = cursor++;
      try {
        return cb::read_graph6(lines[at]);
      } catch (const cb::FormatError& e) {
        throw cb::FormatError(std::string(e.what()) + " (stream line " + std::to_string(at + 1) + ")", at + 1);
      }
    };
  }
  auto sink = [&](const cb::CampaignRecord& r) {
    if (c.records) out.os() << cb::campaign_record_json(r).dump() << "\n";
  };
  const auto summary = cb::run_campaign(next, opts, sink);
  cb::Json j;
  j["summary"] = cb::campaign_summary_json(summary);
  out.os() << j.dump() << "\n";
  return summary.passed() ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Membership, bounded colouring and verification campaigns for (P2 u P4, HVN)-free graphs"};
  app.require_subcommand(1);
  std::uint64_t node_budget = default_node_budget();
  app.add_option("--node-budget", node_budget, "search node budget (default 1e8 or $CHIBOUND_NODE_BUDGET)");

  CommonFlags common;
  std::string input;

  auto* check = app.add_subcommand("check", "exit 0 if the graph is a class member, 1 with a witness if not");
  check->add_option("input", input, "graph file, or - for stdin")->required();
  add_common(check, common);

  bool explain = false, oracle = false;
  auto* color = app.add_subcommand("color", "colour a class member within its budget");
  color->add_option("input", input, "graph file, or - for stdin")->required();
  color->add_flag("--explain", explain, "include the branch trace and decomposition");
  color->add_flag("--oracle-verify", oracle, "also compute the exact chromatic number");
  color->add_option("--node-budget", node_budget, "search node budget");
  add_common(color, common);

  int omega = 4;
  auto* extremal = app.add_subcommand("extremal", "the 2w^2-vertex graph needing ceil(4w/3) colours");
  extremal->add_option("omega", omega, "clique number, at least 4")->required();
  add_common(extremal, common);

  std::size_t n = 0, count = 1;
  std::uint64_t seed = 1;
  std::optional<double> density;
  std::string model = "mixed";
  auto* sample = app.add_subcommand("sample", "random class members as graph6 lines");
  sample->add_option("--n", n, "vertices")->required()->check(CLI::PositiveNumber);
  sample->add_option("--density", density, "edge density before repair (default: drawn per graph)")
      ->check(CLI::Range(0.0, 1.0));
  sample->add_option("--seed", seed, "random seed");
  sample->add_option("--count", count, "number of graphs");
  sample->add_option("--model", model, "gnp, planted or mixed")->check(CLI::IsMember({"gnp", "planted", "mixed"}));
  add_common(sample, common);

  bool members = false, dedup = false;
  auto* enumerate = app.add_subcommand("enumerate", "all labelled graphs on n <= 7 vertices as graph6 lines");
  enumerate->add_option("n", n, "vertices")->required();
  enumerate->add_flag("--members", members, "only class members");
  enumerate->add_flag("--dedup", dedup, "class members, one per isomorphism class");
  add_common(enumerate, common);

  CampaignFlags cf;
  auto* campaign = app.add_subcommand("campaign", "decompose, check, colour and verify a stream of graphs");
  campaign->add_option("input", cf.input, "graph6 stream file, or - for stdin");
  campaign->add_option("--enumerate", cf.enumerate_n, "use every class member on this many vertices");
  campaign->add_option("--sample", cf.sample_n, "use sampled class members on this many vertices");
  campaign->add_option("--count", cf.count, "samples to draw");
  campaign->add_option("--seed", cf.seed, "random seed for sampling");
  campaign->add_option("--density", cf.density, "fixed pre-repair density")->check(CLI::Range(0.0, 1.0));
  campaign->add_option("--model", cf.model, "gnp, planted or mixed")->check(CLI::IsMember({"gnp", "planted", "mixed"}));
  campaign->add_flag("--oracle-verify", cf.oracle, "compare against the exact chromatic number");
  campaign->add_option("--oracle-verify-max-n", cf.oracle_max_n, "largest order sent to the oracle");
  campaign->add_option("--jobs", cf.jobs, "worker threads")->check(CLI::PositiveNumber);
  campaign->add_option("--window", cf.window, "graphs held in memory at once")->check(CLI::PositiveNumber);
  campaign->add_flag("--records", cf.records, "emit one JSON record per graph before the summary");
  campaign->add_flag("--no-properties", cf.no_properties, "skip the structural property checks");
  campaign->add_option("--node-budget", node_budget, "search node budget");
  add_common(campaign, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitIo;
  }

  try {
    if (*check) return cmd_check(input, common);
    if (*color) return cmd_color(input, common, explain, oracle, node_budget);
    if (*extremal) return cmd_extremal(omega, common);
    if (*sample) return cmd_sample(n, density, seed, count, model, common);
    if (*enumerate) return cmd_enumerate(n, members, dedup, common);
    if (*campaign) return cmd_campaign(cf, common, node_budget);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const cb::FormatError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitIo;
}
