#pragma once

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored everywhere; malformed content raises MalformedInput with the line.
//
//   host:       ugg-graph v1 / kind <kind> / n <int> [/ edges / e u v ...]
//   forest:     n <int> / e u v ...
//   chorded:    n <int> / h <int> / c u v ...
//   embedding:  m t g ...   (input vertex t on host vertex g, sorted by t)

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "ugg/convex.hpp"
#include "ugg/embedding.hpp"
#include "ugg/error.hpp"
#include "ugg/trees.hpp"
#include "ugg/ugraph.hpp"

namespace ugg {

inline constexpr Index kMaxUniversalN = Index{1} << 22;
inline constexpr Index kMaxConvexN = Index{1} << 14;

namespace io {

struct Line {
  int number = 0;
  std::vector<std::string> words;
};

inline std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string w; ss >> w;) line.words.push_back(w);
    if (line.words.empty() || line.words.front().front() == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] inline void malformed(const Line& line, const std::string& what) {
  detail::fail(ErrorKind::MalformedInput, "line " + std::to_string(line.number) + ": " + what);
}

inline Index parse_int(const Line& line, const std::string& word) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(word, &used);
  } catch (const std::exception&) {
    malformed(line, "expected an integer, got '" + word + "'");
  }
  if (used != word.size()) malformed(line, "expected an integer, got '" + word + "'");
  return static_cast<Index>(value);
}

/// `key <int>` line.
inline Index keyed_int(const Line& line, const std::string& key) {
  if (line.words.size() != 2 || line.words[0] != key) malformed(line, "expected '" + key + " <int>'");
  return parse_int(line, line.words[1]);
}

/// `tag a b` line.
inline std::pair<Index, Index> tagged_pair(const Line& line, const std::string& tag) {
  if (line.words.size() != 3 || line.words[0] != tag) malformed(line, "expected '" + tag + " <int> <int>'");
  return {parse_int(line, line.words[1]), parse_int(line, line.words[2])};
}

inline std::vector<Line> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::fail(ErrorKind::MalformedInput, "cannot open '" + path + "'");
  return read_lines(in);
}

}  // namespace io

struct HostFile {
  std::string kind;  // universal, caterpillar, twochord, complete, custom
  Index n = 0;
  std::optional<std::vector<Edge>> edges;
};

inline HostFile parse_host(std::istream& in) {
  const auto lines = io::read_lines(in);
  if (lines.empty()) detail::fail(ErrorKind::MalformedInput, "empty host file");
  if (lines[0].words != std::vector<std::string>{"ugg-graph", "v1"}) io::malformed(lines[0], "expected 'ugg-graph v1'");
  if (lines.size() < 3) detail::fail(ErrorKind::MalformedInput, "host file needs kind and n lines");
  HostFile host;
  if (lines[1].words.size() != 2 || lines[1].words[0] != "kind") io::malformed(lines[1], "expected 'kind <name>'");
  host.kind = lines[1].words[1];
  if (host.kind != "universal" && host.kind != "caterpillar" && host.kind != "twochord" && host.kind != "complete" &&
      host.kind != "custom")
    io::malformed(lines[1], "unknown host kind '" + host.kind + "'");
  host.n = io::keyed_int(lines[2], "n");
  if (host.n < 1) io::malformed(lines[2], "n must be positive");
  if (lines.size() > 3) {
    if (lines[3].words != std::vector<std::string>{"edges"}) io::malformed(lines[3], "expected 'edges'");
    host.edges.emplace();
    for (std::size_t i = 4; i < lines.size(); ++i) {
      const auto [u, v] = io::tagged_pair(lines[i], "e");
      if (u < 0 || v < 0 || u >= host.n || v >= host.n || u == v) io::malformed(lines[i], "bad edge endpoints");
      host.edges->push_back(Edge::make(u, v));
    }
  }
  if (host.kind == "custom" && !host.edges) detail::fail(ErrorKind::MalformedInput, "custom host needs an edges section");
  return host;
}

inline void write_host(std::ostream& out, const std::string& kind, Index n, const std::vector<Edge>* edges) {
  out << "ugg-graph v1\nkind " << kind << "\nn " << n << "\n";
  if (edges) {
    out << "edges\n";
    for (const Edge& e : *edges) out << "e " << e.u << ' ' << e.v << '\n';
  }
}

using Host = std::variant<UniversalGraph, ConvexHost>;

/// Builds the host a file describes. An explicit edge list must match the
/// reconstruction exactly.
inline Host materialize_host(const HostFile& file) {
  auto check_edges = [&](std::vector<Edge> expected) {
    if (!file.edges) return;
    std::vector<Edge> given = *file.edges;
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    std::sort(expected.begin(), expected.end());
    if (given != expected)
      detail::fail(ErrorKind::MalformedInput, "explicit edges do not match a " + file.kind + " host on n=" +
                                                  std::to_string(file.n));
  };
  if (file.kind == "universal") {
    detail::require(file.n <= kMaxUniversalN, ErrorKind::SizeTooLarge,
                    "universal host capped at n=" + std::to_string(kMaxUniversalN));
    UniversalGraph g = build_universal(file.n);
    check_edges(g.edges());
    return g;
  }
  detail::require(file.n <= kMaxConvexN, ErrorKind::SizeTooLarge,
                  "convex host capped at n=" + std::to_string(kMaxConvexN));
  ConvexHost h;
  if (file.kind == "caterpillar")
    h = build_caterpillar_host(file.n);
  else if (file.kind == "twochord")
    h = build_twochord_host(file.n);
  else if (file.kind == "complete")
    h = build_complete_convex(file.n);
  else
    return ConvexHost(file.n, ConvexKind::custom, *file.edges);
  check_edges(h.edges());
  return h;
}

inline Host load_host(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::fail(ErrorKind::MalformedInput, "cannot open '" + path + "'");
  return materialize_host(parse_host(in));
}

/// Either a forest (also used for caterpillars) or a chorded cycle.
using InputGraph = std::variant<Forest, ChordedCycle>;

inline InputGraph parse_input(std::istream& in) {
  const auto lines = io::read_lines(in);
  if (lines.empty()) detail::fail(ErrorKind::MalformedInput, "empty input file");
  const Index n = io::keyed_int(lines[0], "n");
  if (n < 1) io::malformed(lines[0], "n must be positive");
  detail::require(n <= kMaxUniversalN, ErrorKind::SizeTooLarge, "input capped at n=" + std::to_string(kMaxUniversalN));
  const bool chorded = lines.size() > 1 && !lines[1].words.empty() && lines[1].words[0] == "h";
  if (chorded) {
    const Index h = io::keyed_int(lines[1], "h");
    if (h < 0 || static_cast<std::size_t>(h) != lines.size() - 2)
      io::malformed(lines[1], "h does not match the number of chord lines");
    std::vector<Edge> chords;
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const auto [u, v] = io::tagged_pair(lines[i], "c");
      chords.push_back({u, v});
    }
    try {
      return ChordedCycle(n, std::move(chords));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SizeTooLarge) throw;
      detail::fail(ErrorKind::MalformedInput, std::string("invalid chorded cycle: ") + e.what());
    }
  }
  std::vector<InputEdge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [u, v] = io::tagged_pair(lines[i], "e");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  try {
    return Forest(static_cast<Vertex>(n), std::move(edges));
  } catch (const Error& e) {
    detail::fail(ErrorKind::MalformedInput, std::string("invalid forest: ") + e.what());
  }
}

inline InputGraph load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) detail::fail(ErrorKind::MalformedInput, "cannot open '" + path + "'");
  return parse_input(in);
}

inline void write_forest(std::ostream& out, const Graph& g) {
  out << "n " << g.size() << '\n';
  for (const InputEdge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

inline void write_chorded(std::ostream& out, const ChordedCycle& g) {
  out << "n " << g.size() << "\nh " << g.chord_count() << '\n';
  for (const Edge& e : g.chords()) out << "c " << e.u << ' ' << e.v << '\n';
}

inline void write_embedding(std::ostream& out, const Embedding& phi) {
  for (std::size_t t = 0; t < phi.size(); ++t) out << "m " << t << ' ' << phi.map()[t] << '\n';
}

/// Unlisted input vertices stay unmapped (-1) and fail validation later.
inline std::vector<Index> parse_embedding(std::istream& in, Vertex input_size) {
  std::vector<Index> map(static_cast<std::size_t>(input_size), -1);
  std::vector<char> seen(static_cast<std::size_t>(input_size), 0);
  for (const io::Line& line : io::read_lines(in)) {
    const auto [t, g] = io::tagged_pair(line, "m");
    if (t < 0 || t >= input_size) io::malformed(line, "input vertex " + std::to_string(t) + " out of range");
    if (seen[static_cast<std::size_t>(t)]) io::malformed(line, "input vertex " + std::to_string(t) + " mapped twice");
    seen[static_cast<std::size_t>(t)] = 1;
    map[static_cast<std::size_t>(t)] = g;
  }
  return map;
}

inline std::vector<Index> load_embedding(const std::string& path, Vertex input_size) {
  std::ifstream in(path);
  if (!in) detail::fail(ErrorKind::MalformedInput, "cannot open '" + path + "'");
  return parse_embedding(in, input_size);
}

}  // namespace ugg
