#pragma once

// Intervals with their highest vertex removed, and the two ways the embedder
// places trees on such "almost intervals": transfer through a
// crossing-isomorphism, or replacement of the highest vertex.

#include <string>
#include <vector>

#include "ugg/embedding.hpp"
#include "ugg/error.hpp"
#include "ugg/geometry.hpp"
#include "ugg/ugraph.hpp"

namespace ugg {

/// Order-preserving bijection from G[source] - v_removed onto G(target).
struct CrossingIso {
  Interval source;
  Index removed = 0;
  Interval target;

  Index size() const noexcept { return target.length(); }

  /// x-rank r (0-based) of the surviving source vertices.
  Index source_vertex(Index rank) const noexcept {
    const Index v = source.lo + rank;
    return v < removed ? v : v + 1;
  }

  Index forward(Index u) const {
    detail::require(source.contains(u) && u != removed, ErrorKind::DomainMismatch,
                    "vertex " + std::to_string(u) + " not in the iso's source");
    return target.lo + (u < removed ? u - source.lo : u - source.lo - 1);
  }

  Index inverse(Index w) const {
    detail::require(target.contains(w), ErrorKind::DomainMismatch,
                    "vertex " + std::to_string(w) + " not in the iso's target");
    return source_vertex(w - target.lo);
  }
};

/// Target interval for G(iv) - v_k when v_k is the highest vertex of iv and iv
/// avoids both the right child of v_k and the left child's subtree of v_k's
/// left sibling.
inline CrossingIso iso_interval(const UniversalGraph& g, const Interval& iv, Index k) {
  g.check_interval(iv);
  auto violated = [](const std::string& clause) { detail::fail(ErrorKind::PreconditionViolated, clause); };
  if (iv.length() < 2) violated("interval must have at least two vertices");
  if (g.highest_in(iv) != k) violated("v_" + std::to_string(k) + " is not the highest vertex of the interval");
  if (k == iv.lo) return {iv, k, {iv.lo + 1, iv.hi}};
  if (k == iv.hi) return {iv, k, {iv.lo, iv.hi - 1}};

  const BTreeShape& shape = g.shape();
  const NodeInfo node = shape.nav(k);
  if (node.right_child && iv.contains(*node.right_child)) violated("interval contains the right child of v_k");
  if (!node.parent || *node.parent + 1 == k) violated("v_k has no left sibling");
  const Index sibling = *node.parent + 1;
  const Index child_size = shape.subtree_size(node.level + 1);
  const IndexRange nephews{sibling + 1, sibling + child_size};
  if (!(iv.hi < nephews.lo || iv.lo > nephews.hi))
    violated("interval contains a descendant of the left child of v_k's left sibling");

  const Index shift = child_size;  // D = 2^l - 1
  return {iv, k, {iv.lo - shift, iv.hi - shift - 1}};
}

/// phi' = lambda^-1 o phi.
inline PartialMap transfer_via_isomorphism(const CrossingIso& iso, const PartialMap& phi) {
  PartialMap out;
  out.reserve(phi.size());
  for (const Assignment& a : phi) {
    detail::require(iso.target.contains(a.host), ErrorKind::DomainMismatch,
                    "host vertex " + std::to_string(a.host) + " outside the iso's target interval");
    out.push_back({a.vertex, iso.inverse(a.host)});
  }
  return out;
}

/// Moves whatever sits on the highest vertex of iv to v_x.
inline PartialMap replace_highest(const UniversalGraph& g, const Interval& iv, const PartialMap& phi, Index x) {
  g.check_interval(iv);
  detail::require(x >= 0 && x < g.size(), ErrorKind::IndexOutOfRange, "replacement vertex outside host");
  detail::require(!iv.contains(x), ErrorKind::PreconditionViolated,
                  "replacement vertex " + std::to_string(x) + " lies inside the interval");
  const Index k = g.highest_in(iv);
  if (const auto second = g.highest_excluding(iv, k))
    detail::require(g.higher(x, *second), ErrorKind::PreconditionViolated,
                    "v_" + std::to_string(x) + " is not higher than every remaining vertex");
  PartialMap out = phi;
  bool moved = false;
  for (Assignment& a : out) {
    if (a.host == k) {
      a.host = x;
      moved = true;
    }
  }
  detail::require(moved, ErrorKind::DomainMismatch, "no input vertex sits on the highest vertex");
  return out;
}

/// Exhaustive check for small instances: same edges, same crossings, same top vertex.
inline bool verify_crossing_iso(const UniversalGraph& g, const CrossingIso& iso) {
  const Index h = iso.size();
  std::vector<Index> u(static_cast<std::size_t>(h)), w(static_cast<std::size_t>(h));
  for (Index r = 0; r < h; ++r) {
    u[static_cast<std::size_t>(r)] = iso.source_vertex(r);
    w[static_cast<std::size_t>(r)] = iso.target.lo + r;
  }
  std::vector<std::pair<Index, Index>> rank_edges;
  for (Index p = 0; p < h; ++p) {
    for (Index q = p + 1; q < h; ++q) {
      const bool eu = g.is_edge(u[static_cast<std::size_t>(p)], u[static_cast<std::size_t>(q)]);
      const bool ew = g.is_edge(w[static_cast<std::size_t>(p)], w[static_cast<std::size_t>(q)]);
      if (eu != ew) return false;
      if (eu) rank_edges.emplace_back(p, q);
    }
  }
  auto at = [](const std::vector<Index>& vs, Index r) { return vs[static_cast<std::size_t>(r)]; };
  for (std::size_t a = 0; a < rank_edges.size(); ++a) {
    for (std::size_t b = a + 1; b < rank_edges.size(); ++b) {
      const auto [p, q] = rank_edges[a];
      const auto [r, s] = rank_edges[b];
      if (p == r || p == s || q == r || q == s) continue;
      const bool cu = edges_cross(g, Edge::make(at(u, p), at(u, q)), Edge::make(at(u, r), at(u, s)));
      const bool cw = edges_cross(g, Edge::make(at(w, p), at(w, q)), Edge::make(at(w, r), at(w, s)));
      if (cu != cw) return false;
    }
  }
  // (C3)
  Index top_u = 0;
  Index top_w = 0;
  for (Index r = 1; r < h; ++r) {
    if (g.higher(at(u, r), at(u, top_u))) top_u = r;
    if (g.higher(at(w, r), at(w, top_w))) top_w = r;
  }
  return top_u == top_w;
}

}  // namespace ugg
