#pragma once

// The universal host graph for forests. Vertices are the preorder ranks
// 0..n-1 of a complete binary tree B; {u, v} is an edge when
//   - one is an ancestor of the other,
//   - one lies in the subtree of a left or right level-neighbor of the other,
//   - one lies in the subtree of the left level-neighbor of the other's parent.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ugg/btree.hpp"
#include "ugg/error.hpp"

namespace ugg {

using Interval = IndexRange;

/// Unordered host edge, stored as {min, max}.
struct Edge {
  Index u = 0;
  Index v = 0;

  static constexpr Edge make(Index a, Index b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct StarCenters {
  Index k = 0;                // highest vertex of the interval
  Index s = 0;                // second highest
  std::optional<Index> t;     // highest of [k+1, hi], when k < hi
};

enum class Materialize { yes, no };

class UniversalGraph {
 public:
  UniversalGraph(Index n, Materialize materialize) : shape_(BTreeShape::for_size(n)), n_(n) {
    level_.resize(static_cast<std::size_t>(n));
    pos_.resize(static_cast<std::size_t>(n));
    fill_locations(0, 1, 0);
    if (materialize == Materialize::yes) build_adjacency();
  }

  const BTreeShape& shape() const noexcept { return shape_; }
  Index size() const noexcept { return n_; }
  bool materialized() const noexcept { return materialized_; }

  int level(Index v) const { return level_[checked(v)]; }
  Index pos(Index v) const { return pos_[checked(v)]; }
  Location location(Index v) const { return {level(v), pos(v)}; }

  /// Cached height comparison (O(1)).
  bool higher(Index u, Index w) const {
    detail::require(u != w, ErrorKind::EqualIndices, "higher() needs distinct vertices");
    return BTreeShape::higher_than(location(u), location(w));
  }

  Index highest_in(const Interval& iv) const {
    check_interval(iv);
    return shape_.highest_in(iv.lo, iv.hi);
  }

  /// Highest vertex of `iv` other than `excluded`; nullopt if none remains.
  std::optional<Index> highest_excluding(const Interval& iv, Index excluded) const {
    check_interval(iv);
    std::optional<Index> best;
    auto consider = [&](Index lo, Index hi) {
      if (lo > hi) return;
      const Index c = shape_.highest_in(lo, hi);
      if (!best || higher(c, *best)) best = c;
    };
    if (!iv.contains(excluded)) {
      consider(iv.lo, iv.hi);
    } else {
      consider(iv.lo, excluded - 1);
      consider(excluded + 1, iv.hi);
    }
    return best;
  }

  bool is_edge(Index u, Index v) const {
    checked(u);
    checked(v);
    detail::require(u != v, ErrorKind::EqualIndices, "is_edge() needs distinct vertices");
    return directed_edge(u, v) || directed_edge(v, u);
  }

  /// Sorted neighbor list (requires materialization).
  std::span<const Index> neighbors(Index v) const {
    require_materialized();
    const auto i = checked(v);
    return {adj_.data() + offsets_[i], adj_.data() + offsets_[i + 1]};
  }

  const std::vector<Edge>& edges() const {
    require_materialized();
    return edges_;
  }

  std::size_t edge_count() const {
    require_materialized();
    return edges_.size();
  }

  StarCenters star_centers(const Interval& iv) const {
    check_interval(iv);
    detail::require(iv.length() >= 2, ErrorKind::IntervalTooSmall, "star_centers needs two vertices");
    StarCenters sc;
    sc.k = highest_in(iv);
    sc.s = *highest_excluding(iv, sc.k);
    if (sc.k < iv.hi) sc.t = shape_.highest_in(sc.k + 1, iv.hi);
    return sc;
  }

  void check_interval(const Interval& iv) const {
    if (iv.lo < 0 || iv.hi >= n_ || iv.lo > iv.hi)
      detail::fail(ErrorKind::IndexOutOfRange, "interval [" + std::to_string(iv.lo) + "," +
                                                   std::to_string(iv.hi) + "] outside [0," +
                                                   std::to_string(n_ - 1) + "]");
  }

 private:
  // Is w in B(a) where a sits at (la, pa) and w at (lw, pw)?
  static bool below(int la, Index pa, int lw, Index pw) noexcept {
    return lw >= la && (pw >> (lw - la)) == pa;
  }

  // u is adjacent to w through a rule anchored at u: u an ancestor of w, w
  // below a level-neighbor of u, or w below the left level-neighbor of u's parent.
  bool directed_edge(Index u, Index w) const {
    const int lu = level_[static_cast<std::size_t>(u)];
    const Index pu = pos_[static_cast<std::size_t>(u)];
    const int lw = level_[static_cast<std::size_t>(w)];
    const Index pw = pos_[static_cast<std::size_t>(w)];
    if (lw >= lu) {
      const Index anc = pw >> (lw - lu);
      if (anc == pu || anc == pu - 1 || anc == pu + 1) return true;
    }
    if (lu > 1) {
      const Index pp = (pu >> 1) - 1;  // parent's left level-neighbor
      if (pp >= 0 && below(lu - 1, pp, lw, pw)) return true;
    }
    return false;
  }

  void fill_locations(Index node, int level, Index pos) {
    if (node >= n_) return;
    level_[static_cast<std::size_t>(node)] = static_cast<std::int8_t>(level);
    pos_[static_cast<std::size_t>(node)] = pos;
    if (level == shape_.height()) return;
    fill_locations(node + 1, level + 1, 2 * pos);
    fill_locations(node + shape_.subtree_size(level + 1) + 1, level + 1, 2 * pos + 1);
  }

  void build_adjacency() {
    std::vector<Edge> pairs;
    auto add_range = [&](Index v, Index lo, Index hi) {
      hi = std::min(hi, n_ - 1);
      for (Index w = lo; w <= hi; ++w)
        if (w != v) pairs.push_back(Edge::make(v, w));
    };
    auto add_subtree = [&](Index v, int level, Index pos) {
      if (pos < 0 || pos >= shape_.level_width(level)) return;
      const Index root = shape_.index_of(level, pos);
      add_range(v, root, root + shape_.subtree_size(level) - 1);
    };
    for (Index v = 0; v < n_; ++v) {
      const int l = level_[static_cast<std::size_t>(v)];
      const Index p = pos_[static_cast<std::size_t>(v)];
      add_subtree(v, l, p);
      add_subtree(v, l, p - 1);
      add_subtree(v, l, p + 1);
      if (l > 1) add_subtree(v, l - 1, (p >> 1) - 1);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    edges_ = std::move(pairs);

    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[static_cast<std::size_t>(e.u) + 1];
      ++offsets_[static_cast<std::size_t>(e.v) + 1];
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
    adj_.resize(edges_.size() * 2);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
      adj_[fill[static_cast<std::size_t>(e.u)]++] = e.v;
      adj_[fill[static_cast<std::size_t>(e.v)]++] = e.u;
    }
    for (Index v = 0; v < n_; ++v)
      std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[static_cast<std::size_t>(v)]),
                adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[static_cast<std::size_t>(v) + 1]));
    materialized_ = true;
  }

  std::size_t checked(Index v) const {
    if (v < 0 || v >= n_)
      detail::fail(ErrorKind::IndexOutOfRange,
                   "vertex " + std::to_string(v) + " outside [0," + std::to_string(n_ - 1) + "]");
    return static_cast<std::size_t>(v);
  }

  void require_materialized() const {
    detail::require(materialized_, ErrorKind::PreconditionViolated,
                    "adjacency not materialized for this host");
  }

  BTreeShape shape_;
  Index n_;
  std::vector<std::int8_t> level_;
  std::vector<Index> pos_;
  bool materialized_ = false;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Index> adj_;
};

/// Builds the host on n vertices with materialized adjacency.
inline UniversalGraph build_universal(Index n, Materialize materialize = Materialize::yes) {
  detail::require(n >= 1, ErrorKind::InvalidSize, "host needs at least one vertex");
  return UniversalGraph(n, materialize);
}

}  // namespace ugg
