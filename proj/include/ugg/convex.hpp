#pragma once

// Hosts in convex position: vertices 0..n-1 on a circle in counterclockwise
// order. Two constructions: the pi-sequence caterpillar host and the
// sqrt(n)-star host for cycles with two chords.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ugg/embedding.hpp"
#include "ugg/error.hpp"
#include "ugg/trees.hpp"
#include "ugg/ugraph.hpp"
#include "ugg/validate.hpp"

namespace ugg {

/// Term i (0-based) of the infinite pi sequence: 2^(tz(i+1)+1) - 1.
inline Index pi_term(Index i) {
  detail::require(i >= 0, ErrorKind::IndexOutOfRange, "negative pi index");
  const int tz = std::countr_zero(static_cast<std::uint64_t>(i + 1));
  return (Index{1} << (tz + 1)) - 1;
}

struct PiSequence {
  Index n = 0;
  std::vector<Index> terms;

  Index operator[](Index i) const { return terms.at(static_cast<std::size_t>(i)); }
  Index sum() const {
    Index s = 0;
    for (Index t : terms) s += t;
    return s;
  }
};

/// First n terms of the smallest pi_m (m = 2^h - 1) with m >= n.
inline PiSequence pi_sequence(Index n) {
  detail::require(n >= 1, ErrorKind::InvalidSize, "pi sequence needs n >= 1");
  PiSequence p{n, std::vector<Index>(static_cast<std::size_t>(n))};
  for (Index i = 0; i < n; ++i) p.terms[static_cast<std::size_t>(i)] = pi_term(i);
  return p;
}

/// True when every window of consecutive terms has a maximum at least its length.
inline bool pi_window_property(const PiSequence& p) {
  const Index n = p.n;
  for (Index lo = 0; lo < n; ++lo) {
    Index best = 0;
    for (Index hi = lo; hi < n; ++hi) {
      best = std::max(best, p[hi]);
      if (best < hi - lo + 1) return false;
    }
  }
  return true;
}

enum class ConvexKind { caterpillar, twochord, complete, custom };

inline std::string to_string(ConvexKind kind) {
  switch (kind) {
    case ConvexKind::caterpillar: return "caterpillar";
    case ConvexKind::twochord: return "twochord";
    case ConvexKind::complete: return "complete";
    case ConvexKind::custom: return "custom";
  }
  return "custom";
}

inline Index circular_distance(Index n, Index i, Index j) {
  const Index d = i > j ? i - j : j - i;
  return std::min(d, n - d);
}

class ConvexHost {
 public:
  ConvexHost() = default;

  ConvexHost(Index n, ConvexKind kind, std::vector<Edge> edges) : n_(n), kind_(kind), adj_(static_cast<std::size_t>(n)) {
    detail::require(n >= 1, ErrorKind::InvalidSize, "convex host needs n >= 1");
    for (const Edge& e : edges) {
      detail::require(e.u != e.v, ErrorKind::DegenerateEdge, "self-loop in convex host");
      detail::require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n, ErrorKind::IndexOutOfRange,
                      "convex host edge outside 0.." + std::to_string(n - 1));
      adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }

  Index size() const noexcept { return n_; }
  ConvexKind kind() const noexcept { return kind_; }

  bool is_edge(Index u, Index v) const {
    detail::require(u >= 0 && u < n_ && v >= 0 && v < n_, ErrorKind::IndexOutOfRange, "vertex outside convex host");
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
  }

  const std::vector<Index>& neighbors(Index v) const { return adj_.at(static_cast<std::size_t>(v)); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Index u = 0; u < n_; ++u)
      for (Index v : adj_[static_cast<std::size_t>(u)])
        if (u < v) out.push_back({u, v});
    return out;
  }

  Index edge_count() const {
    Index twice = 0;
    for (const auto& list : adj_) twice += static_cast<Index>(list.size());
    return twice / 2;
  }

  bool has_spanning_cycle() const {
    if (n_ < 3) return false;
    for (Index i = 0; i < n_; ++i)
      if (!is_edge(i, (i + 1) % n_)) return false;
    return true;
  }

 private:
  Index n_ = 0;
  ConvexKind kind_ = ConvexKind::custom;
  std::vector<std::vector<Index>> adj_;
};

inline std::vector<Edge> cycle_edges(Index n) {
  std::vector<Edge> out;
  if (n == 2) out.push_back({0, 1});
  if (n >= 3)
    for (Index i = 0; i < n; ++i) out.push_back(Edge::make(i, (i + 1) % n));
  return out;
}

inline ConvexHost build_complete_convex(Index n) {
  std::vector<Edge> edges;
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v) edges.push_back({u, v});
  return ConvexHost(n, ConvexKind::complete, std::move(edges));
}

inline ConvexHost build_cycle_host(Index n) {
  detail::require(n >= 3, ErrorKind::InvalidSize, "cycle host needs n >= 3");
  return ConvexHost(n, ConvexKind::custom, cycle_edges(n));
}

/// {i, j} is an edge iff their circular distance is at most max(pi(i), pi(j)).
inline ConvexHost build_caterpillar_host(Index n) {
  const PiSequence pi = pi_sequence(n);
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) {
    const Index reach = std::min(pi[i], n / 2);
    for (Index d = 1; d <= reach; ++d) {
      edges.push_back(Edge::make(i, (i + d) % n));
      edges.push_back(Edge::make(i, ((i - d) % n + n) % n));
    }
  }
  std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
  return ConvexHost(n, ConvexKind::caterpillar, std::move(edges));
}

/// Star centres {0..q-1} u {iq : 1 <= i <= q} mod n, q = floor(sqrt(n)), sorted.
inline std::vector<Index> twochord_set(Index n) {
  detail::require(n >= 1, ErrorKind::InvalidSize, "twochord set needs n >= 1");
  Index q = 0;
  while ((q + 1) * (q + 1) <= n) ++q;
  std::vector<Index> s;
  for (Index i = 0; i < q; ++i) s.push_back(i);
  for (Index i = 1; i <= q; ++i) s.push_back((i * q) % n);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// Lexicographically first (a, b) in S with b - a = d.
inline std::optional<std::pair<Index, Index>> realizing_pair(const std::vector<Index>& s, Index d) {
  for (Index a : s)
    if (std::binary_search(s.begin(), s.end(), a + d)) return std::make_pair(a, a + d);
  return std::nullopt;
}

inline bool twochord_covering(Index n) {
  const auto s = twochord_set(n);
  for (Index d = 1; d <= n / 2; ++d)
    if (!realizing_pair(s, d)) return false;
  return true;
}

inline ConvexHost build_twochord_host(Index n) {
  detail::require(n >= 3, ErrorKind::InvalidSize, "twochord host needs n >= 3");
  std::vector<Edge> edges = cycle_edges(n);
  for (Index c : twochord_set(n))
    for (Index v = 0; v < n; ++v)
      if (v != c) edges.push_back(Edge::make(c, v));
  return ConvexHost(n, ConvexKind::twochord, std::move(edges));
}

/// Strict interleaving of the endpoints along the circle.
inline bool convex_edges_cross(Index n, Edge e1, Edge e2) {
  detail::require(e1.u != e1.v && e2.u != e2.v, ErrorKind::DegenerateEdge, "edge with equal endpoints");
  for (Index v : {e1.u, e1.v, e2.u, e2.v})
    detail::require(v >= 0 && v < n, ErrorKind::IndexOutOfRange, "endpoint outside 0.." + std::to_string(n - 1));
  if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) return false;
  const Index lo = std::min(e1.u, e1.v), hi = std::max(e1.u, e1.v);
  auto inside = [&](Index x) { return lo < x && x < hi; };
  return inside(e2.u) != inside(e2.v);
}

/// A spanning cycle w_0..w_{n-1} plus h pairwise disjoint, noninterleaving chords.
class ChordedCycle {
 public:
  ChordedCycle() = default;

  ChordedCycle(Index n, std::vector<Edge> chords) : n_(n) {
    detail::require(n >= 3, ErrorKind::InvalidSize, "chorded cycle needs n >= 3");
    std::vector<Index> seen;
    for (const Edge& c : chords) {
      detail::require(c.u >= 0 && c.u < n && c.v >= 0 && c.v < n, ErrorKind::IndexOutOfRange,
                      "chord endpoint outside 0.." + std::to_string(n - 1));
      detail::require(c.u != c.v, ErrorKind::DegenerateEdge, "chord with equal endpoints");
      detail::require(circular_distance(n, c.u, c.v) >= 2, ErrorKind::MalformedInput,
                      "chord {" + std::to_string(c.u) + "," + std::to_string(c.v) + "} is a cycle edge");
      chords_.push_back(Edge::make(c.u, c.v));
      seen.push_back(c.u);
      seen.push_back(c.v);
    }
    std::sort(seen.begin(), seen.end());
    detail::require(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), ErrorKind::MalformedInput,
                    "chords are not vertex-disjoint");
    for (std::size_t i = 0; i < chords_.size(); ++i)
      for (std::size_t j = i + 1; j < chords_.size(); ++j)
        detail::require(!convex_edges_cross(n, chords_[i], chords_[j]), ErrorKind::MalformedInput,
                        "chords interleave");
    std::sort(chords_.begin(), chords_.end());
  }

  Index size() const noexcept { return n_; }
  Index chord_count() const noexcept { return static_cast<Index>(chords_.size()); }
  const std::vector<Edge>& chords() const noexcept { return chords_; }

  Graph graph() const {
    std::vector<InputEdge> es;
    for (const Edge& e : cycle_edges(n_)) es.push_back({static_cast<Vertex>(e.u), static_cast<Vertex>(e.v)});
    for (const Edge& e : chords_) es.push_back({static_cast<Vertex>(e.u), static_cast<Vertex>(e.v)});
    return Graph(static_cast<Vertex>(n_), std::move(es));
  }

  friend bool operator==(const ChordedCycle&, const ChordedCycle&) = default;

 private:
  Index n_ = 0;
  std::vector<Edge> chords_;
};

/// Non-leaf vertices form a path (the spine); each spine vertex carries its leaves.
struct Caterpillar {
  Vertex n = 0;
  std::vector<Vertex> spine;
  std::vector<std::vector<Vertex>> leaves;  // leaves[i] hang off spine[i]
};

/// Spine order starts at the spine end with the smaller id.
inline Caterpillar recognize_caterpillar(const Graph& g) {
  const Vertex n = g.size();
  detail::require(n >= 1, ErrorKind::InvalidSize, "empty graph");
  detail::require(static_cast<Vertex>(g.edges().size()) == n - 1, ErrorKind::NotACaterpillar,
                  "a caterpillar on n vertices has n-1 edges");
  const Forest f(g);
  detail::require(f.is_tree(), ErrorKind::NotACaterpillar, "graph is not connected");

  Caterpillar c{n, {}, {}};
  if (n <= 2) {
    c.spine = {0};
    c.leaves = {n == 2 ? std::vector<Vertex>{1} : std::vector<Vertex>{}};
    return c;
  }
  std::vector<char> on_spine(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) >= 2) {
      on_spine[static_cast<std::size_t>(v)] = 1;
      inner.push_back(v);
    }
  auto spine_degree = [&](Vertex v) {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += on_spine[static_cast<std::size_t>(w)];
    return d;
  };
  Vertex start = -1;
  for (Vertex v : inner) {
    const int d = spine_degree(v);
    detail::require(d <= 2, ErrorKind::NotACaterpillar, "vertex " + std::to_string(v) + " branches off the spine");
    if (d <= 1 && start < 0) start = v;
  }
  detail::require(start >= 0, ErrorKind::NotACaterpillar, "spine has no end");
  for (Vertex prev = -1, v = start; v >= 0;) {
    c.spine.push_back(v);
    std::vector<Vertex> leaves;
    Vertex next = -1;
    for (Vertex w : g.neighbors(v)) {
      if (!on_spine[static_cast<std::size_t>(w)])
        leaves.push_back(w);
      else if (w != prev)
        next = w;
    }
    std::sort(leaves.begin(), leaves.end());
    c.leaves.push_back(std::move(leaves));
    prev = v;
    v = next;
  }
  detail::require(c.spine.size() == inner.size(), ErrorKind::NotACaterpillar, "non-leaf vertices do not form a path");
  return c;
}

inline bool is_caterpillar(const Graph& g) {
  try {
    recognize_caterpillar(g);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotACaterpillar) return false;
    throw;
  }
}

/// Star i (spine vertex plus leaves) fills the next block of consecutive host
/// vertices; the spine vertex takes the block's maximum-pi slot (smallest
/// index on ties) and the leaves fill the rest in order.
inline Embedding embed_caterpillar(const ConvexHost& host, const Caterpillar& c) {
  detail::require(static_cast<Index>(c.n) == host.size(), ErrorKind::SizeMismatch,
                  "caterpillar has " + std::to_string(c.n) + " vertices, host has " + std::to_string(host.size()));
  std::vector<Index> map(static_cast<std::size_t>(c.n), -1);
  Index at = 0;
  for (std::size_t i = 0; i < c.spine.size(); ++i) {
    const auto size = static_cast<Index>(1 + c.leaves[i].size());
    Index best = at;
    for (Index x = at + 1; x < at + size; ++x)
      if (pi_term(x) > pi_term(best)) best = x;
    map[static_cast<std::size_t>(c.spine[i])] = best;
    Index slot = at;
    for (Vertex leaf : c.leaves[i]) {
      if (slot == best) ++slot;
      map[static_cast<std::size_t>(leaf)] = slot++;
    }
    at += size;
  }
  detail::require(at == host.size(), ErrorKind::SizeMismatch, "spine stars do not fill the host");
  return Embedding(HostKind::caterpillar, host.size(), std::move(map));
}

inline Embedding embed_caterpillar(const ConvexHost& host, const Graph& g) {
  return embed_caterpillar(host, recognize_caterpillar(g));
}

/// Rotates the cycle so the endpoints bounding the smaller gap between the two
/// chords land on v_a and v_b, a and b in S with b - a equal to that gap.
inline Embedding embed_twochord(const ConvexHost& host, const ChordedCycle& g) {
  const Index n = g.size();
  detail::require(g.chord_count() == 2, ErrorKind::NotTwoChord,
                  "expected 2 chords, got " + std::to_string(g.chord_count()));
  detail::require(n >= 6, ErrorKind::NotTwoChord, "two disjoint chords need n >= 6");
  detail::require(host.size() == n, ErrorKind::SizeMismatch, "host and input sizes differ");

  // Endpoints in circular order; chords pair them as {e0,e1},{e2,e3} or {e0,e3},{e1,e2}.
  std::vector<Index> e{g.chords()[0].u, g.chords()[0].v, g.chords()[1].u, g.chords()[1].v};
  std::sort(e.begin(), e.end());
  const Edge first = Edge::make(e[0], e[1]);
  const bool adjacent_pairs = first == g.chords()[0] || first == g.chords()[1];
  // A gap runs from `from` forward to `to` between endpoints of different chords.
  struct Gap {
    Index from, to;
  };
  const Gap gaps[2] = {adjacent_pairs ? Gap{e[1], e[2]} : Gap{e[0], e[1]},
                       adjacent_pairs ? Gap{e[3], e[0]} : Gap{e[2], e[3]}};
  auto length = [&](const Gap& gap) { return ((gap.to - gap.from) % n + n) % n; };
  const Gap& pick = length(gaps[1]) < length(gaps[0]) ? gaps[1] : gaps[0];
  const Index d = length(pick);

  const auto pair = realizing_pair(twochord_set(n), d);
  if (!pair) detail::fail(ErrorKind::NoRealizingPair, "no a,b in S with b-a=" + std::to_string(d));
  const Index a = pair->first;
  std::vector<Index> map(static_cast<std::size_t>(n));
  for (Index t = 0; t < n; ++t) map[static_cast<std::size_t>(t)] = ((t - pick.from + a) % n + n) % n;
  return Embedding(HostKind::twochord, n, std::move(map));
}

inline ValidationReport validate_embedding(const ConvexHost& host, const Graph& input, const Embedding& phi) {
  const Index n = host.size();
  return validate_with(
      n, input, phi.map(), [&](Index a, Index b) { return a != b && host.is_edge(a, b); },
      [&](Edge e1, Edge e2) { return convex_edges_cross(n, e1, e2); });
}

}  // namespace ugg
