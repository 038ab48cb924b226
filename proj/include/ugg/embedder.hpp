#pragma once

// Recursive embedding of trees into intervals of the universal host.
//
// A call receives a tree (a connected vertex set of the input graph), one or
// two portals and an interval of the same length. With one portal a, a lands
// on the highest vertex of the interval; with two portals a, b the image of a
// is left of the image of b and the open quarter-planes above-left of a and
// above-right of b stay empty. Every step checks its own postconditions and
// throws InternalInvariantBroken if one fails.

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ugg/crossing_iso.hpp"
#include "ugg/embedding.hpp"
#include "ugg/error.hpp"
#include "ugg/trees.hpp"
#include "ugg/ugraph.hpp"

namespace ugg {

struct Portals {
  Vertex a = 0;
  std::optional<Vertex> b;
};

struct EmbedOptions {
  bool trace = false;  // keep a TraceRecord per recursive call
};

namespace detail {

inline std::vector<Vertex> sorted_copy(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<Vertex> set_minus(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> sa = sorted_copy(a), sb = sorted_copy(b), out;
  std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

inline std::optional<Interval> as_interval(const std::vector<Index>& slots) {
  if (slots.empty()) return std::nullopt;
  if (slots.back() - slots.front() + 1 != static_cast<Index>(slots.size())) return std::nullopt;
  return Interval{slots.front(), slots.back()};
}

/// Splits `slots` (ascending) into consecutive runs of the given sizes.
inline std::vector<std::vector<Index>> split_slots(const std::vector<Index>& slots, const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<Index>> out;
  std::size_t at = 0;
  for (std::size_t sz : sizes) {
    out.emplace_back(slots.begin() + static_cast<std::ptrdiff_t>(at),
                     slots.begin() + static_cast<std::ptrdiff_t>(at + sz));
    at += sz;
  }
  return out;
}

class TreeEmbedder {
 public:
  TreeEmbedder(const UniversalGraph& host, const Graph& input, EmbedOptions options)
      : host_(host), input_(input), options_(options) {}

  PartialMap single(const std::vector<Vertex>& piece, Vertex a, Interval iv, int depth) {
    expect(static_cast<Index>(piece.size()) == iv.length(), "piece size " + std::to_string(piece.size()) +
                                                                 " != interval length " + std::to_string(iv.length()));
    host_.check_interval(iv);
    PartialMap phi;
    std::string label;
    if (piece.size() == 1) {
      label = "base";
      phi = {{a, iv.lo}};
    } else {
      const Index k = host_.highest_in(iv);
      const RootedTree t(input_.get(), piece, a);
      if (t.children(0).size() >= 2) {
        label = "1.1";
        phi = case_high_degree(t, iv, k, depth);
      } else {
        phi = case_leaf_portal(t, iv, k, depth, label);
      }
      expect(host_of(phi, a) == k, "portal not on the highest vertex after case " + label);
    }
    finish(phi, piece, {label, iv, a, -1, depth});
    return phi;
  }

  PartialMap dual(const std::vector<Vertex>& piece, Vertex a, Vertex b, Interval iv, int depth) {
    expect(a != b, "two-portal call with equal portals");
    expect(static_cast<Index>(piece.size()) == iv.length(), "piece size != interval length (two portals)");
    const RootedTree t(input_.get(), piece, a);
    std::vector<Vertex> path;  // local ids from b up to a
    for (Vertex x = t.local(b); x != RootedTree::kNone; x = t.parent(x)) path.push_back(x);
    std::reverse(path.begin(), path.end());

    PartialMap phi;
    Index at = iv.lo;
    for (std::size_t i = 0; i < path.size(); ++i) {
      std::vector<Vertex> block = t.subtree_vertices(path[i]);
      if (i + 1 < path.size()) block = set_minus(block, t.subtree_vertices(path[i + 1]));
      const Interval sub{at, at + static_cast<Index>(block.size()) - 1};
      append(phi, single(sorted_copy(block), t.global(path[i]), sub, depth + 1));
      at = sub.hi + 1;
    }
    expect(at == iv.hi + 1, "two-portal blocks do not fill the interval");
    finish(phi, piece, {"2", iv, a, b, depth});
    return phi;
  }

  std::vector<Provenance> take_provenance() { return std::move(provenance_); }
  std::vector<TraceRecord> take_trace() { return std::move(trace_); }

 private:
  // deg(a) >= 2: child subtrees on consecutive blocks of [lo,hi] \ {k}; the
  // block next to k absorbs k and carries the portal.
  PartialMap case_high_degree(const RootedTree& t, Interval iv, Index k, int depth) {
    std::vector<Index> slots;
    for (Index x = iv.lo; x <= iv.hi; ++x)
      if (x != k) slots.push_back(x);
    const auto& kids = t.children(0);
    std::vector<std::size_t> sizes;
    for (Vertex c : kids) sizes.push_back(t.subtree_size(c));
    const auto blocks = split_slots(slots, sizes);
    const Index neighbor = k > iv.lo ? k - 1 : k + 1;

    PartialMap phi;
    for (std::size_t x = 0; x < kids.size(); ++x) {
      const auto& block = blocks[x];
      const bool absorbs_k = std::find(block.begin(), block.end(), neighbor) != block.end();
      std::vector<Index> hosts = block;
      std::vector<Vertex> piece = t.subtree_vertices(kids[x]);
      Vertex portal = t.global(kids[x]);
      if (absorbs_k) {
        hosts.push_back(k);
        std::sort(hosts.begin(), hosts.end());
        piece.push_back(t.root());
        portal = t.root();
      }
      const auto sub = as_interval(hosts);
      expect(sub.has_value(), "case 1.1 block is not an interval");
      append(phi, single(sorted_copy(piece), portal, *sub, depth + 1));
    }
    return phi;
  }

  // deg(a) == 1.
  PartialMap case_leaf_portal(const RootedTree& t, Interval iv, Index k, int depth, std::string& label) {
    const Vertex a = t.root();
    const Vertex a1 = t.global(t.children(0).front());
    const std::vector<Vertex> rest = t.subtree_vertices(t.children(0).front());
    PartialMap phi;

    if (k == iv.hi) {
      label = "1.2.1";
      phi = single(sorted_copy(rest), a1, {iv.lo, k - 1}, depth + 1);
    } else if (k == iv.lo) {
      label = "1.2.2";
      phi = single(sorted_copy(rest), a1, {k + 1, iv.hi}, depth + 1);
    } else {
      const NodeInfo node = host_.shape().nav(k);
      const bool has_left_sibling = node.parent && *node.parent + 1 != k;
      const Index sibling = has_left_sibling ? *node.parent + 1 : -1;
      const bool right_child_inside = node.right_child && iv.contains(*node.right_child);
      if (has_left_sibling && iv.contains(sibling)) {
        label = "1.2.3";
        expect(sibling == iv.lo, "left sibling inside the interval but not at its left end");
        const Interval right{iv.lo + 1, iv.hi};
        const PartialMap psi = single(sorted_copy(rest), a1, right, depth + 1);
        phi = guarded("1.2.3", [&] { return replace_highest(host_, right, psi, iv.lo); });
      } else if (!right_child_inside) {
        label = "1.2.4";
        phi = case_no_right_child(rest, a1, iv, k, depth);
      } else {
        phi = case_right_child(rest, a1, iv, k, *node.right_child, depth, label);
      }
    }
    phi.push_back({a, k});
    return phi;
  }

  PartialMap case_no_right_child(const std::vector<Vertex>& rest, Vertex a1, Interval iv, Index k, int depth) {
    const auto s = static_cast<std::size_t>(iv.hi - k + 1);
    const RootedTree tp(input_.get(), rest, a1);
    const Vertex c = cut_vertex(tp, s);
    const auto& kids = tp.children(c);

    std::size_t ell = 0;
    std::size_t m = 1;
    while (m < s) {
      expect(ell < kids.size(), "case 1.2.4 ran out of children");
      m += tp.subtree_size(kids[ell++]);
    }
    std::vector<Vertex> h_piece{tp.global(c)};
    for (std::size_t x = 0; x < ell; ++x) append(h_piece, tp.subtree_vertices(kids[x]));

    const Interval window{iv.hi - static_cast<Index>(m), iv.hi};
    const CrossingIso iso = guarded("1.2.4", [&] { return iso_interval(host_, window, k); });
    PartialMap phi = transfer_via_isomorphism(iso, single(sorted_copy(h_piece), tp.global(c), iso.target, depth + 1));
    expect(host_of(phi, tp.global(c)) == k + 1, "case 1.2.4: c not on the left child of v_k");

    std::size_t tail = 0;
    for (std::size_t x = ell; x < kids.size(); ++x) tail += tp.subtree_size(kids[x]);
    Index at = window.lo - static_cast<Index>(tail);
    for (std::size_t x = ell; x < kids.size(); ++x) {
      const Interval sub{at, at + static_cast<Index>(tp.subtree_size(kids[x])) - 1};
      append(phi, single(sorted_copy(tp.subtree_vertices(kids[x])), tp.global(kids[x]), sub, depth + 1));
      at = sub.hi + 1;
    }

    const Interval remainder{iv.lo, window.lo - static_cast<Index>(tail) - 1};
    append(phi, embed_remainder(tp, c, remainder, depth));
    return phi;
  }

  PartialMap case_right_child(const std::vector<Vertex>& rest, Vertex a1, Interval iv, Index k, Index r, int depth,
                              std::string& label) {
    const auto s = static_cast<std::size_t>(iv.hi - r + 1);
    const RootedTree tp(input_.get(), rest, a1);
    const Vertex c = cut_vertex(tp, s);
    const auto m = static_cast<Index>(tp.subtree_size(c));
    const Vertex cg = tp.global(c);
    PartialMap phi;

    if (m <= iv.hi - k - 1) {
      label = "1.2.5.1";
      expect(c != 0, "case 1.2.5.1 with c at the root of T'");
      const Vertex parent = tp.global(tp.parent(c));
      const Interval left{iv.lo, iv.hi - m - 1};
      const PartialMap psi1 = embed_remainder(tp, c, left, depth);
      phi = guarded("1.2.5.1", [&] { return replace_highest(host_, left, psi1, r); });

      std::vector<Vertex> with_parent = tp.subtree_vertices(c);
      with_parent.push_back(parent);
      const PartialMap psi2 = single(sorted_copy(with_parent), parent, {iv.hi - m, iv.hi}, depth + 1);
      expect(host_of(psi2, parent) == r, "case 1.2.5.1: c' not on the right child of v_k");
      for (const Assignment& x : psi2)
        if (x.vertex != parent) phi.push_back(x);
      return phi;
    }

    label = "1.2.5.2";
    const Interval window{iv.hi - m, iv.hi};
    std::vector<Index> slots;
    for (Index x = window.lo; x <= window.hi; ++x)
      if (x != k && x != r) slots.push_back(x);
    const auto& kids = tp.children(c);
    std::vector<std::size_t> sizes;
    for (Vertex d : kids) sizes.push_back(tp.subtree_size(d));
    const auto blocks = split_slots(slots, sizes);

    for (std::size_t x = 0; x < kids.size(); ++x) {
      std::vector<Index> hosts = blocks[x];
      std::vector<Vertex> piece = tp.subtree_vertices(kids[x]);
      Vertex portal = tp.global(kids[x]);
      if (std::find(hosts.begin(), hosts.end(), r - 1) != hosts.end()) {
        hosts.push_back(r);
        std::sort(hosts.begin(), hosts.end());
        piece.push_back(cg);
        portal = cg;
      }
      append(phi, embed_on_slots(sorted_copy(piece), portal, hosts, k, depth));
    }
    expect(host_of(phi, cg) == r, "case 1.2.5.2: c not on the right child of v_k");

    append(phi, embed_remainder(tp, c, {iv.lo, window.lo - 1}, depth));
    return phi;
  }

  // T' - T(c) with portals a' (root of tp) and c' (parent of c).
  PartialMap embed_remainder(const RootedTree& tp, Vertex c, Interval iv, int depth) {
    if (c == 0) {
      expect(iv.lo == iv.hi + 1, "empty remainder with a non-empty interval");
      return {};
    }
    std::vector<Vertex> piece = set_minus(tp.vertices(), tp.subtree_vertices(c));
    const Vertex a1 = tp.root();
    const Vertex parent = tp.global(tp.parent(c));
    if (parent == a1) return single(piece, a1, iv, depth + 1);
    return dual(piece, a1, parent, iv, depth + 1);
  }

  // A slot set that is an interval, or an interval whose highest vertex k was removed.
  PartialMap embed_on_slots(const std::vector<Vertex>& piece, Vertex portal, const std::vector<Index>& slots, Index k,
                            int depth) {
    if (const auto sub = as_interval(slots)) return single(piece, portal, *sub, depth + 1);
    std::vector<Index> with_k = slots;
    with_k.push_back(k);
    std::sort(with_k.begin(), with_k.end());
    const auto full = as_interval(with_k);
    expect(full.has_value(), "block is neither an interval nor an interval minus v_k");
    const CrossingIso iso = guarded("iso", [&] { return iso_interval(host_, *full, k); });
    return transfer_via_isomorphism(iso, single(piece, portal, iso.target, depth + 1));
  }

  template <class Fn>
  auto guarded(const std::string& where, Fn&& fn) -> decltype(fn()) {
    try {
      return fn();
    } catch (const Error& e) {
      fail(ErrorKind::InternalInvariantBroken, "case " + where + ": " + e.what());
    }
  }

  void expect(bool cond, const std::string& what) const {
    if (!cond) fail(ErrorKind::InternalInvariantBroken, what);
  }

  static void append(PartialMap& into, const PartialMap& more) { into.insert(into.end(), more.begin(), more.end()); }
  static void append(std::vector<Vertex>& into, const std::vector<Vertex>& more) {
    into.insert(into.end(), more.begin(), more.end());
  }

  void finish(const PartialMap& phi, const std::vector<Vertex>& piece, Provenance step) {
    expect(phi.size() == piece.size(), "case " + step.label + " placed " + std::to_string(phi.size()) + " of " +
                                           std::to_string(piece.size()) + " vertices");
    for (const Assignment& x : phi) expect(step.interval.contains(x.host), "case " + step.label + " left its interval");
    provenance_.push_back(step);
    if (options_.trace) trace_.push_back({std::move(step), piece, phi});
  }

  const UniversalGraph& host_;
  std::reference_wrapper<const Graph> input_;
  EmbedOptions options_;
  std::vector<Provenance> provenance_;
  std::vector<TraceRecord> trace_;
};

inline Embedding assemble(const UniversalGraph& host, Vertex input_size, const PartialMap& phi) {
  std::vector<Index> map(static_cast<std::size_t>(input_size), -1);
  for (const Assignment& x : phi) map[static_cast<std::size_t>(x.vertex)] = x.host;
  return Embedding(HostKind::universal, host.size(), std::move(map));
}

}  // namespace detail

/// Embeds the tree spanned by `vertices` onto G(iv).
inline Embedding embed_tree(const UniversalGraph& host, const Graph& input, std::span<const Vertex> vertices,
                            Portals portals, Interval iv, EmbedOptions options = {}) {
  detail::require(static_cast<Index>(vertices.size()) == iv.length(), ErrorKind::SizeMismatch,
                  std::to_string(vertices.size()) + " tree vertices for an interval of length " +
                      std::to_string(iv.length()));
  host.check_interval(iv);
  std::vector<Vertex> piece(vertices.begin(), vertices.end());
  std::sort(piece.begin(), piece.end());
  auto contains = [&](Vertex v) { return std::binary_search(piece.begin(), piece.end(), v); };
  detail::require(contains(portals.a), ErrorKind::PreconditionViolated, "portal a not in the tree");
  if (portals.b) {
    detail::require(contains(*portals.b), ErrorKind::PreconditionViolated, "portal b not in the tree");
    detail::require(*portals.b != portals.a, ErrorKind::PreconditionViolated, "portals must be distinct");
  }
  detail::TreeEmbedder embedder(host, input, options);
  const PartialMap phi = portals.b ? embedder.dual(piece, portals.a, *portals.b, iv, 0)
                                   : embedder.single(piece, portals.a, iv, 0);
  Embedding out = detail::assemble(host, input.size(), phi);
  out.provenance() = embedder.take_provenance();
  out.trace() = embedder.take_trace();
  return out;
}

/// Components go to consecutive intervals of [0, n-1] in order of their lowest
/// vertex id; each is rooted at, and has its single portal on, that vertex.
inline Embedding embed_forest(const UniversalGraph& host, const Forest& forest, EmbedOptions options = {}) {
  detail::require(static_cast<Index>(forest.size()) == host.size(), ErrorKind::SizeMismatch,
                  "forest has " + std::to_string(forest.size()) + " vertices, host has " +
                      std::to_string(host.size()));
  detail::TreeEmbedder embedder(host, forest.graph(), options);
  PartialMap phi;
  Index at = 0;
  for (const auto& comp : forest.components()) {
    const Interval iv{at, at + static_cast<Index>(comp.size()) - 1};
    const PartialMap part = embedder.single(comp, comp.front(), iv, 0);
    phi.insert(phi.end(), part.begin(), part.end());
    at = iv.hi + 1;
  }
  Embedding out = detail::assemble(host, forest.size(), phi);
  out.provenance() = embedder.take_provenance();
  out.trace() = embedder.take_trace();
  return out;
}

}  // namespace ugg
