#pragma once

// Exhaustive enumerators for small instances, their brute-force cross-checks,
// the convex universality certifier, and random labeled trees.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ugg/convex.hpp"
#include "ugg/error.hpp"
#include "ugg/trees.hpp"

namespace ugg {

inline constexpr Vertex kForestCap = 12;
inline constexpr Vertex kCaterpillarCap = 14;
inline constexpr Index kChordedCycleCap = 30;
inline constexpr Index kChordCap = 3;

namespace detail {

using Adjacency = std::vector<std::vector<Vertex>>;

inline Adjacency adjacency_of(Vertex n, const std::vector<InputEdge>& edges) {
  Adjacency adj(static_cast<std::size_t>(n));
  for (const InputEdge& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

inline std::string rooted_code(const Adjacency& adj, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : adj[static_cast<std::size_t>(v)])
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

/// Centres of a tree by repeated leaf stripping.
inline std::vector<Vertex> tree_centers(const Adjacency& adj) {
  const auto n = static_cast<Vertex>(adj.size());
  if (n <= 2) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    return all;
  }
  std::vector<std::size_t> deg(adj.size());
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)].size();
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  Vertex remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<Vertex>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : adj[static_cast<std::size_t>(v)])
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

/// Canonical string of an unlabeled free tree.
inline std::string free_tree_code(const Adjacency& adj) {
  std::string best;
  for (Vertex c : tree_centers(adj)) {
    std::string code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

/// One representative edge list per free tree on k vertices, sorted by code.
inline const std::vector<std::vector<InputEdge>>& free_trees(Vertex k) {
  static std::vector<std::vector<std::vector<InputEdge>>> cache{{}, {{}}};
  while (static_cast<Vertex>(cache.size()) <= k) {
    const auto m = static_cast<Vertex>(cache.size());
    std::map<std::string, std::vector<InputEdge>> found;
    for (const auto& edges : cache.back()) {
      for (Vertex at = 0; at < m - 1; ++at) {
        std::vector<InputEdge> grown = edges;
        grown.push_back({at, m - 1});
        found.emplace(free_tree_code(adjacency_of(m, grown)), std::move(grown));
      }
    }
    std::vector<std::vector<InputEdge>> level;
    for (auto& [code, edges] : found) level.push_back(std::move(edges));
    cache.push_back(std::move(level));
  }
  return cache[static_cast<std::size_t>(k)];
}

}  // namespace detail

/// One forest per isomorphism class on n vertices. Components are free trees
/// from a canonical list, combined as multisets; component i occupies a
/// consecutive id range.
inline std::vector<Forest> enumerate_forests(Vertex n, Vertex cap = kForestCap) {
  detail::require(n >= 1, ErrorKind::InvalidSize, "forest enumeration needs n >= 1");
  detail::require(n <= cap, ErrorKind::SizeTooLarge, "forest enumeration capped at n=" + std::to_string(cap));
  std::vector<Forest> out;
  std::vector<std::pair<Vertex, std::size_t>> parts;  // (size, tree index), nonincreasing
  std::function<void(Vertex, std::pair<Vertex, std::size_t>)> rec = [&](Vertex left,
                                                                          std::pair<Vertex, std::size_t> bound) {
    if (left == 0) {
      std::vector<InputEdge> edges;
      Vertex base = 0;
      for (const auto& [size, idx] : parts) {
        for (const InputEdge& e : detail::free_trees(size)[idx]) edges.push_back({e.u + base, e.v + base});
        base += size;
      }
      out.emplace_back(n, std::move(edges));
      return;
    }
    for (Vertex size = std::min(left, bound.first); size >= 1; --size) {
      const std::size_t count = detail::free_trees(size).size();
      const std::size_t top = size == bound.first ? bound.second + 1 : count;
      for (std::size_t idx = 0; idx < std::min(top, count); ++idx) {
        parts.emplace_back(size, idx);
        rec(left - size, {size, idx});
        parts.pop_back();
      }
    }
  };
  rec(n, {n, detail::free_trees(n).size()});
  return out;
}

/// Free trees only.
inline std::vector<Graph> enumerate_trees(Vertex n, Vertex cap = kForestCap) {
  detail::require(n >= 1, ErrorKind::InvalidSize, "tree enumeration needs n >= 1");
  detail::require(n <= cap, ErrorKind::SizeTooLarge, "tree enumeration capped at n=" + std::to_string(cap));
  std::vector<Graph> out;
  for (const auto& edges : detail::free_trees(n)) out.emplace_back(n, edges);
  return out;
}

namespace detail {

/// Backtracking isomorphism test for small graphs given as adjacency matrices.
inline bool isomorphic(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  const auto n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  auto deg = [](std::uint32_t row) { return std::popcount(row); };
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::uint32_t used = 0;
  std::function<bool(int)> go = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used >> w & 1u) continue;
      if (deg(a[static_cast<std::size_t>(v)]) != deg(b[static_cast<std::size_t>(w)])) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        const bool ea = a[static_cast<std::size_t>(v)] >> u & 1u;
        const bool eb = b[static_cast<std::size_t>(w)] >> map[static_cast<std::size_t>(u)] & 1u;
        ok = ea == eb;
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = w;
      used |= 1u << w;
      if (go(v + 1)) return true;
      used &= ~(1u << w);
    }
    return false;
  };
  return go(0);
}

inline std::vector<int> degree_invariant(const std::vector<std::uint32_t>& m) {
  std::vector<int> inv;
  for (std::uint32_t row : m) {
    std::vector<int> around;
    for (std::size_t u = 0; u < m.size(); ++u)
      if (row >> u & 1u) around.push_back(std::popcount(m[u]));
    std::sort(around.begin(), around.end());
    int code = std::popcount(row);
    for (int d : around) code = code * 16 + d;
    inv.push_back(code);
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

}  // namespace detail

/// Independent count: every labeled forest on n vertices by edge-subset search
/// with union-find pruning, reduced by invariant buckets and a backtracking
/// isomorphism test. Practical up to n = 8.
inline std::size_t count_forests_bruteforce(int n) {
  detail::require(n >= 1 && n <= 9, ErrorKind::SizeTooLarge, "brute-force forest count needs 1 <= n <= 9");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::map<std::vector<int>, std::vector<std::vector<std::uint32_t>>> classes;
  std::size_t count = 0;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == pairs.size()) {
      auto inv = detail::degree_invariant(adj);
      auto& bucket = classes[inv];
      for (const auto& rep : bucket)
        if (detail::isomorphic(rep, adj)) return;
      bucket.push_back(adj);
      ++count;
      return;
    }
    go(i + 1);
    const auto [u, v] = pairs[i];
    const int ru = find(u), rv = find(v);
    if (ru == rv) return;
    parent[static_cast<std::size_t>(ru)] = rv;
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
    go(i + 1);
    adj[static_cast<std::size_t>(u)] &= ~(1u << v);
    adj[static_cast<std::size_t>(v)] &= ~(1u << u);
    parent[static_cast<std::size_t>(ru)] = ru;
  };
  for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
  go(0);
  return count;
}

/// One caterpillar per isomorphism class, from spine leaf-count sequences
/// taken up to reversal. Spine vertices are 0..k-1, leaves follow.
inline std::vector<Graph> enumerate_caterpillars(Vertex n, Vertex cap = kCaterpillarCap) {
  detail::require(n >= 1, ErrorKind::InvalidSize, "caterpillar enumeration needs n >= 1");
  detail::require(n <= cap, ErrorKind::SizeTooLarge, "caterpillar enumeration capped at n=" + std::to_string(cap));
  if (n == 1) return {Graph(1, {})};
  if (n == 2) return {Graph(2, {{0, 1}})};
  std::vector<Graph> out;
  for (Vertex k = 1; k <= n - 2; ++k) {
    std::vector<Vertex> seq(static_cast<std::size_t>(k), 0);
    std::function<void(Vertex, Vertex)> fill = [&](Vertex i, Vertex left) {
      if (i == k) {
        if (left != 0) return;
        if (seq.front() < 1 || seq.back() < 1 || (k == 1 && seq.front() < 2)) return;
        if (std::lexicographical_compare(seq.rbegin(), seq.rend(), seq.begin(), seq.end())) return;
        std::vector<InputEdge> edges;
        for (Vertex s = 0; s + 1 < k; ++s) edges.push_back({s, s + 1});
        Vertex next = k;
        for (Vertex s = 0; s < k; ++s)
          for (Vertex x = 0; x < seq[static_cast<std::size_t>(s)]; ++x) edges.push_back({s, next++});
        out.emplace_back(n, std::move(edges));
        return;
      }
      for (Vertex l = 0; l <= left; ++l) {
        seq[static_cast<std::size_t>(i)] = l;
        fill(i + 1, left - l);
      }
    };
    fill(0, n - k);
  }
  return out;
}

/// Closed form for the number of caterpillars on n >= 4 vertices.
inline std::size_t caterpillar_count_formula(Vertex n) {
  if (n <= 3) return 1;
  return (std::size_t{1} << (n - 4)) + (std::size_t{1} << ((n - 4) / 2));
}

namespace detail {

inline std::vector<Edge> dihedral_image(Index n, const std::vector<Edge>& chords, Index shift, bool flip) {
  std::vector<Edge> out;
  for (const Edge& e : chords) {
    auto f = [&](Index x) { return ((flip ? -x : x) + shift + n) % n; };
    out.push_back(Edge::make(f(e.u), f(e.v)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every labeled set of h disjoint, noninterleaving chords; `visit` gets each once.
inline void for_each_chord_set(Index n, Index h, const std::function<void(const std::vector<Edge>&)>& visit) {
  std::vector<Edge> all;
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 2; v < n; ++v)
      if (circular_distance(n, u, v) >= 2) all.push_back({u, v});
  std::vector<Edge> chosen;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (static_cast<Index>(chosen.size()) == h) {
      visit(chosen);
      return;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
      const Edge e = all[i];
      if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) continue;
      bool ok = true;
      for (const Edge& c : chosen) ok = ok && !convex_edges_cross(n, c, e);
      if (!ok) continue;
      used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
      chosen.push_back(e);
      go(i + 1);
      chosen.pop_back();
      used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 0;
    }
  };
  go(0);
}

}  // namespace detail

/// One member of O_h(n) per class under the dihedral group: the one whose
/// sorted chord list is lexicographically least among its 2n images.
inline std::vector<ChordedCycle> enumerate_chorded_cycles(Index n, Index h) {
  detail::require(h >= 0, ErrorKind::InvalidSize, "negative chord count");
  detail::require(n <= kChordedCycleCap && h <= kChordCap, ErrorKind::SizeTooLarge,
                  "chorded cycle enumeration capped at n=" + std::to_string(kChordedCycleCap) +
                      ", h=" + std::to_string(kChordCap));
  detail::require(n >= 2 * h + 2 && n >= 3, ErrorKind::InvalidSize, "need n >= 2h+2");
  std::vector<ChordedCycle> out;
  detail::for_each_chord_set(n, h, [&](const std::vector<Edge>& chords) {
    for (Index shift = 0; shift < n; ++shift)
      for (bool flip : {false, true})
        if (detail::dihedral_image(n, chords, shift, flip) < chords) return;
    out.emplace_back(n, chords);
  });
  return out;
}

/// Number of classes by Burnside's lemma over the labeled sets.
inline std::size_t count_chorded_classes_burnside(Index n, Index h) {
  std::size_t fixed = 0;
  detail::for_each_chord_set(n, h, [&](const std::vector<Edge>& chords) {
    for (Index shift = 0; shift < n; ++shift)
      for (bool flip : {false, true})
        if (detail::dihedral_image(n, chords, shift, flip) == chords) ++fixed;
  });
  return fixed / static_cast<std::size_t>(2 * n);
}

struct UniversalityResult {
  bool universal = true;
  std::optional<ChordedCycle> counterexample;
  std::size_t checked = 0;
};

/// Tries all 2n placements of each member's cycle onto the host's convex
/// order; a member fits when every chord lands on a host edge.
inline UniversalityResult check_universal_convex(const ConvexHost& host, const std::vector<ChordedCycle>& family) {
  if (!host.has_spanning_cycle()) detail::fail(ErrorKind::NoSpanningCycle, "host lacks the cycle on its convex order");
  const Index n = host.size();
  UniversalityResult result;
  for (const ChordedCycle& g : family) {
    detail::require(g.size() == n, ErrorKind::SizeMismatch, "family member size differs from host");
    ++result.checked;
    bool fits = false;
    for (Index shift = 0; shift < n && !fits; ++shift) {
      for (bool flip : {false, true}) {
        bool all = true;
        for (const Edge& e : detail::dihedral_image(n, g.chords(), shift, flip)) all = all && host.is_edge(e.u, e.v);
        if (all) {
          fits = true;
          break;
        }
      }
    }
    if (!fits) {
      result.universal = false;
      result.counterexample = g;
      return result;
    }
  }
  return result;
}

/// Uniform labeled tree on n vertices via a random Pruefer sequence.
inline Graph random_labeled_tree(Vertex n, std::mt19937_64& rng) {
  detail::require(n >= 1, ErrorKind::InvalidSize, "random tree needs n >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (Vertex& x : code) {
    x = pick(rng);
    ++degree[static_cast<std::size_t>(x)];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  std::vector<InputEdge> edges;
  for (Vertex x : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, x});
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  const Vertex u = leaves.top();
  leaves.pop();
  edges.push_back({u, leaves.top()});
  return Graph(n, std::move(edges));
}

}  // namespace ugg
