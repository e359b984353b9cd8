#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class GraphFormat { graph6, dimacs, edges };

inline std::string_view format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::graph6: return "graph6";
    case GraphFormat::dimacs: return "dimacs";
    case GraphFormat::edges: return "edges";
  }
  return "?";
}

inline GraphFormat parse_format_name(std::string_view s) {
  if (s == "graph6" || s == "g6") return GraphFormat::graph6;
  if (s == "dimacs" || s == "col") return GraphFormat::dimacs;
  if (s == "edges" || s == "edgelist") return GraphFormat::edges;
  throw std::invalid_argument("unknown graph format '" + std::string(s) + "'");
}

struct GraphDocument {
  Graph graph;
  std::optional<std::string> name;
  GraphFormat format = GraphFormat::graph6;
};

// ---------------------------------------------------------------------------
// graph6

inline constexpr std::size_t kGraph6MaxOrder = 258047;

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw std::invalid_argument("graph6 writer supports at most 258047 vertices");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  }
  unsigned acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph read_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty input");
  for (char c : text)
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
      throw FormatError("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) + " outside 63..126");

  auto val = [&](std::size_t i) { return static_cast<std::size_t>(static_cast<unsigned char>(text[i]) - 63); };
  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = val(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw FormatError("graph6: orders above 258047 are not supported");
    if (text.size() < 4) throw FormatError("graph6: truncated size field");
    n = (val(1) << 12) | (val(2) << 6) | val(3);
    pos = 4;
  }
  const std::size_t nbits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t nchars = (nbits + 5) / 6;
  if (text.size() - pos < nchars) throw FormatError("graph6: truncated adjacency data");
  if (text.size() - pos > nchars) throw FormatError("graph6: trailing data after adjacency (order mismatch)");

  GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t byte = val(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) b.add_edge(i, j);
    }
  }
  if (nbits % 6 != 0) {
    const std::size_t last = val(pos + nchars - 1);
    const std::size_t pad = 6 - nbits % 6;
    if (last & ((std::size_t{1} << pad) - 1)) throw FormatError("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// shared tokenising helpers

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw FormatError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  return v;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    f(line, lineno);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// DIMACS .col

inline Graph read_dimacs_col(std::string_view text) {
  std::optional<GraphBuilder> b;
  detail::for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    const auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0] == "c") return;
    if (toks[0] == "p") {
      if (b) throw FormatError("dimacs: duplicate problem line", lineno);
      if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
        throw FormatError("dimacs: expected 'p edge <n> <m>'", lineno);
      b.emplace(detail::parse_count(toks[2], lineno));
      detail::parse_count(toks[3], lineno);
      return;
    }
    if (toks[0] == "e") {
      if (!b) throw FormatError("dimacs: edge before problem line", lineno);
      if (toks.size() != 3) throw FormatError("dimacs: expected 'e <u> <v>'", lineno);
      const auto u = detail::parse_count(toks[1], lineno);
      const auto v = detail::parse_count(toks[2], lineno);
      if (u < 1 || v < 1 || u > b->order() || v > b->order())
        throw FormatError("dimacs: vertex index outside 1.." + std::to_string(b->order()), lineno);
      if (u == v) throw FormatError("dimacs: self-loop", lineno);
      b->add_edge(u - 1, v - 1);
      return;
    }
    throw FormatError("dimacs: unrecognised line type '" + std::string(toks[0]) + "'", lineno);
  });
  if (!b) throw FormatError("dimacs: missing 'p edge' header");
  return std::move(*b).build();
}

inline std::string write_dimacs_col(const Graph& g) {
  std::ostringstream os;
  const auto es = g.edges();
  os << "p edge " << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// plain edge list: "n=<k>" then one 0-indexed pair per line; '#' starts a comment

inline Graph read_edge_list(std::string_view text) {
  std::optional<GraphBuilder> b;
  detail::for_each_line(text, [&](std::string_view line, std::size_t lineno) {
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    const auto toks = detail::split_ws(line);
    if (toks.empty()) return;
    if (!b) {
      if (toks.size() != 1 || toks[0].substr(0, 2) != "n=")
        throw FormatError("edges: first line must be 'n=<k>'", lineno);
      b.emplace(detail::parse_count(toks[0].substr(2), lineno));
      return;
    }
    if (toks.size() != 2) throw FormatError("edges: expected two vertex indices", lineno);
    const auto u = detail::parse_count(toks[0], lineno);
    const auto v = detail::parse_count(toks[1], lineno);
    if (u >= b->order() || v >= b->order())
      throw FormatError("edges: vertex index outside 0.." + std::to_string(b->order() - 1), lineno);
    if (u == v) throw FormatError("edges: self-loop", lineno);
    b->add_edge(u, v);
  });
  if (!b) throw FormatError("edges: missing 'n=<k>' line");
  return std::move(*b).build();
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

inline Graph read_graph(std::string_view text, GraphFormat f) {
  switch (f) {
    case GraphFormat::graph6: return read_graph6(text);
    case GraphFormat::dimacs: return read_dimacs_col(text);
    case GraphFormat::edges: return read_edge_list(text);
  }
  throw std::invalid_argument("bad format");
}

inline std::string write_graph(const Graph& g, GraphFormat f) {
  switch (f) {
    case GraphFormat::graph6: return write_graph6(g);
    case GraphFormat::dimacs: return write_dimacs_col(g);
    case GraphFormat::edges: return write_edge_list(g);
  }
  throw std::invalid_argument("bad format");
}

inline GraphDocument read_document(std::string_view text, GraphFormat f, std::optional<std::string> name = {}) {
  return GraphDocument{read_graph(text, f), std::move(name), f};
}

/// FNV-1a over the canonical graph6 encoding; used as a stable record key.
inline std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : write_graph6(g)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace chibound
