#pragma once

// Index arithmetic for the complete rooted ordered binary tree whose preorder
// ranks are the x-coordinates of the host graph. Nothing is materialized; a
// shape is three integers.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "ugg/error.hpp"

namespace ugg {

using Index = std::int64_t;

/// Closed index range [lo, hi] in preorder.
struct IndexRange {
  Index lo = 0;
  Index hi = 0;

  constexpr bool contains(Index i) const noexcept { return lo <= i && i <= hi; }
  constexpr Index length() const noexcept { return hi - lo + 1; }
  friend constexpr bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Level (1 = root) and 0-based left-to-right position within that level.
struct Location {
  int level = 1;
  Index pos = 0;
  friend constexpr bool operator==(const Location&, const Location&) = default;
};

struct NodeInfo {
  Index index = 0;
  int level = 1;
  Index pos = 0;
  std::optional<Index> parent;
  std::optional<Index> left_child;
  std::optional<Index> right_child;
  std::optional<Index> left_level_neighbor;
  std::optional<Index> right_level_neighbor;
  IndexRange subtree_range;
};

class BTreeShape {
 public:
  /// Minimal complete tree holding `n` active vertices (m = 2^h - 1 >= n, m < 2n).
  static BTreeShape for_size(Index n) {
    detail::require(n >= 1, ErrorKind::InvalidSize, "tree needs at least one vertex");
    detail::require(n <= (Index{1} << 40), ErrorKind::SizeTooLarge, "n exceeds 2^40");
    int h = 1;
    while ((Index{1} << h) - 1 < n) ++h;
    return BTreeShape(h, n);
  }

  /// Full tree of height h with all 2^h - 1 vertices active.
  static BTreeShape full(int h) {
    detail::require(h >= 1 && h <= 40, ErrorKind::InvalidSize, "height out of range");
    return BTreeShape(h, (Index{1} << h) - 1);
  }

  int height() const noexcept { return h_; }
  Index node_count() const noexcept { return m_; }
  Index size() const noexcept { return n_; }

  /// Number of nodes in a subtree rooted on `level`.
  Index subtree_size(int level) const noexcept { return (Index{1} << (h_ - level + 1)) - 1; }

  Index level_width(int level) const noexcept { return Index{1} << (level - 1); }

  Location locate(Index i) const {
    check(i);
    Index node = 0;
    Index span = m_;
    Location loc;
    while (node != i) {
      const Index half = (span - 1) / 2;
      if (i <= node + half) {
        node += 1;
        loc.pos = 2 * loc.pos;
      } else {
        node += half + 1;
        loc.pos = 2 * loc.pos + 1;
      }
      ++loc.level;
      span = half;
    }
    return loc;
  }

  /// Inverse of locate().
  Index index_of(int level, Index pos) const {
    detail::require(level >= 1 && level <= h_, ErrorKind::IndexOutOfRange,
                    "level " + std::to_string(level) + " outside 1.." + std::to_string(h_));
    detail::require(pos >= 0 && pos < level_width(level), ErrorKind::IndexOutOfRange,
                    "position " + std::to_string(pos) + " outside level " + std::to_string(level));
    Index node = 0;
    for (int d = 1; d < level; ++d) {
      const bool right = (pos >> (level - 1 - d)) & 1;
      node += right ? subtree_size(d + 1) + 1 : 1;
    }
    return node;
  }

  IndexRange subtree_range(Index i) const {
    const Location loc = locate(i);
    return {i, i + subtree_size(loc.level) - 1};
  }

  NodeInfo nav(Index i) const {
    const Location loc = locate(i);
    NodeInfo info;
    info.index = i;
    info.level = loc.level;
    info.pos = loc.pos;
    info.subtree_range = {i, i + subtree_size(loc.level) - 1};
    if (loc.level > 1) info.parent = index_of(loc.level - 1, loc.pos / 2);
    if (loc.level < h_) {
      info.left_child = i + 1;
      info.right_child = i + subtree_size(loc.level + 1) + 1;
    }
    if (loc.pos > 0) info.left_level_neighbor = index_of(loc.level, loc.pos - 1);
    if (loc.pos + 1 < level_width(loc.level)) info.right_level_neighbor = index_of(loc.level, loc.pos + 1);
    return info;
  }

  /// Height order: u is higher than w iff u sits on a smaller level, or on the
  /// same level further right.
  bool higher(Index u, Index w) const {
    detail::require(u != w, ErrorKind::EqualIndices, "higher() needs distinct vertices");
    return higher_than(locate(u), locate(w));
  }

  static constexpr bool higher_than(const Location& a, const Location& b) noexcept {
    return a.level < b.level || (a.level == b.level && a.pos > b.pos);
  }

  /// Highest vertex of the index interval [lo, hi] by descending from the root.
  Index highest_in(Index lo, Index hi) const {
    check(lo);
    check(hi);
    detail::require(lo <= hi, ErrorKind::IndexOutOfRange, "empty interval");
    Index node = 0;
    Index span = m_;
    while (true) {
      if (lo <= node && node <= hi) return node;
      const Index half = (span - 1) / 2;
      const Index right = node + half + 1;
      if (hi < right) {
        node += 1;
      } else if (lo >= right) {
        node = right;
      } else {
        // Interval covers the end of the left subtree and the start of the
        // right one; the right child is on the shallowest reachable level.
        return right;
      }
      span = half;
    }
  }

  /// Is `d` in the subtree rooted at `a` (a itself included)?
  bool in_subtree(Index a, Index d) const { return subtree_range(a).contains(d); }

  friend bool operator==(const BTreeShape&, const BTreeShape&) = default;

 private:
  BTreeShape(int h, Index n) : h_(h), m_((Index{1} << h) - 1), n_(n) {}

  void check(Index i) const {
    if (i < 0 || i >= m_)
      detail::fail(ErrorKind::IndexOutOfRange,
                   "index " + std::to_string(i) + " outside tree of " + std::to_string(m_) + " nodes");
  }

  int h_;
  Index m_;
  Index n_;
};

}  // namespace ugg
