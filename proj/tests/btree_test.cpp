#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "ugg/btree.hpp"

using ugg::BTreeShape;
using ugg::ErrorKind;
using ugg::Index;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const ugg::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::MalformedInput;
}

}  // namespace

TEST(BTreeShape, ForSizePicksMinimalHeight) {
  EXPECT_EQ(BTreeShape::for_size(1).height(), 1);
  EXPECT_EQ(BTreeShape::for_size(2).height(), 2);
  EXPECT_EQ(BTreeShape::for_size(3).height(), 2);
  EXPECT_EQ(BTreeShape::for_size(4).height(), 3);
  EXPECT_EQ(BTreeShape::for_size(1023).height(), 10);
  EXPECT_EQ(BTreeShape::for_size(1024).height(), 11);
  for (Index n = 1; n <= 300; ++n) {
    const auto s = BTreeShape::for_size(n);
    EXPECT_LE(n, s.node_count());
    EXPECT_LT(s.node_count(), 2 * n);
  }
}

TEST(BTreeShape, RejectsBadSizes) {
  EXPECT_EQ(kind_of([] { BTreeShape::for_size(0); }), ErrorKind::InvalidSize);
  EXPECT_EQ(kind_of([] { BTreeShape::for_size(Index{1} << 41); }), ErrorKind::SizeTooLarge);
  EXPECT_EQ(kind_of([] { BTreeShape::full(0); }), ErrorKind::InvalidSize);
}

TEST(BTreeShape, LocateExamples) {
  const auto s = BTreeShape::full(3);
  EXPECT_EQ(s.locate(0).level, 1);
  EXPECT_EQ(s.locate(0).pos, 0);
  EXPECT_EQ(s.locate(4).level, 2);
  EXPECT_EQ(s.locate(4).pos, 1);
  EXPECT_EQ(s.locate(5).level, 3);
  EXPECT_EQ(s.locate(5).pos, 2);
  EXPECT_EQ(kind_of([&] { s.locate(7); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([&] { s.locate(-1); }), ErrorKind::IndexOutOfRange);
}

TEST(BTreeShape, LocateRoundTripsAndMatchesExplicitTree) {
  for (int h = 1; h <= 8; ++h) {
    const auto s = BTreeShape::full(h);
    const oracle::ExplicitTree t(h);
    ASSERT_EQ(t.size(), s.node_count());
    for (Index i = 0; i < s.node_count(); ++i) {
      const auto loc = s.locate(i);
      EXPECT_EQ(s.index_of(loc.level, loc.pos), i);
      EXPECT_EQ(loc.level, t.nodes[static_cast<std::size_t>(i)].level);
      const auto& row = t.levels[static_cast<std::size_t>(loc.level - 1)];
      EXPECT_EQ(row[static_cast<std::size_t>(loc.pos)], i);
    }
  }
}

TEST(BTreeShape, NavExamples) {
  const auto s = BTreeShape::full(3);
  const auto root = s.nav(0);
  EXPECT_FALSE(root.parent);
  EXPECT_EQ(root.left_child, 1);
  EXPECT_EQ(root.right_child, 4);
  EXPECT_FALSE(root.left_level_neighbor);
  EXPECT_FALSE(root.right_level_neighbor);
  EXPECT_EQ(root.subtree_range.lo, 0);
  EXPECT_EQ(root.subtree_range.hi, 6);

  const auto four = s.nav(4);
  EXPECT_EQ(four.parent, 0);
  EXPECT_EQ(four.left_child, 5);
  EXPECT_EQ(four.right_child, 6);
  EXPECT_EQ(four.left_level_neighbor, 1);
  EXPECT_FALSE(four.right_level_neighbor);
  EXPECT_EQ(four.subtree_range.lo, 4);
  EXPECT_EQ(four.subtree_range.hi, 6);

  const auto two = s.nav(2);
  EXPECT_EQ(two.parent, 1);
  EXPECT_FALSE(two.left_child);
  EXPECT_FALSE(two.right_child);
  EXPECT_FALSE(two.left_level_neighbor);
  EXPECT_EQ(two.right_level_neighbor, 3);
  EXPECT_EQ(two.subtree_range.lo, 2);
  EXPECT_EQ(two.subtree_range.hi, 2);
}

TEST(BTreeShape, NavIsConsistent) {
  for (int h = 1; h <= 7; ++h) {
    const auto s = BTreeShape::full(h);
    const oracle::ExplicitTree t(h);
    for (Index i = 0; i < s.node_count(); ++i) {
      const auto nd = s.nav(i);
      const auto& ref = t.nodes[static_cast<std::size_t>(i)];
      EXPECT_EQ(nd.parent.value_or(-1), ref.parent);
      EXPECT_EQ(nd.left_child.value_or(-1), ref.left);
      EXPECT_EQ(nd.right_child.value_or(-1), ref.right);
      for (auto c : {nd.left_child, nd.right_child}) {
        if (!c) continue;
        EXPECT_EQ(s.nav(*c).parent, i);
        EXPECT_TRUE(nd.subtree_range.contains(*c));
      }
      if (nd.parent) {
        EXPECT_FALSE(nd.subtree_range.contains(*nd.parent));
      }
      if (nd.right_level_neighbor) {
        EXPECT_EQ(s.nav(*nd.right_level_neighbor).left_level_neighbor, i);
      }
      if (nd.left_level_neighbor) {
        EXPECT_EQ(s.nav(*nd.left_level_neighbor).right_level_neighbor, i);
      }
      // subtree range is exactly the explicit subtree
      for (Index v = 0; v < s.node_count(); ++v)
        EXPECT_EQ(nd.subtree_range.contains(v), t.in_subtree(static_cast<int>(i), static_cast<int>(v)));
    }
  }
}

TEST(BTreeShape, HigherExamples) {
  const auto s = BTreeShape::full(3);
  EXPECT_TRUE(s.higher(0, 5));
  EXPECT_TRUE(s.higher(4, 1));
  EXPECT_FALSE(s.higher(6, 1));
  EXPECT_EQ(kind_of([&] { s.higher(3, 3); }), ErrorKind::EqualIndices);
  EXPECT_EQ(kind_of([&] { s.higher(3, 9); }), ErrorKind::IndexOutOfRange);
}

TEST(BTreeShape, DescendingOrderOnSevenNodes) {
  const auto s = BTreeShape::full(3);
  std::vector<Index> order(7);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return s.higher(a, b); });
  EXPECT_EQ(order, (std::vector<Index>{0, 4, 1, 6, 5, 3, 2}));
}

TEST(BTreeShape, HigherMatchesRightFirstBfs) {
  for (int h = 1; h <= 7; ++h) {
    const auto s = BTreeShape::full(h);
    const oracle::ExplicitTree t(h);
    for (Index u = 0; u < s.node_count(); ++u)
      for (Index w = 0; w < s.node_count(); ++w)
        if (u != w) {
          EXPECT_EQ(s.higher(u, w), t.higher(static_cast<int>(u), static_cast<int>(w)));
        }
  }
}

TEST(BTreeShape, HighestInMatchesScanAndSpansToTheRight) {
  for (int h = 1; h <= 6; ++h) {
    const auto s = BTreeShape::full(h);
    for (Index lo = 0; lo < s.node_count(); ++lo) {
      for (Index hi = lo; hi < s.node_count(); ++hi) {
        Index best = lo;
        for (Index v = lo + 1; v <= hi; ++v)
          if (s.higher(v, best)) best = v;
        const Index k = s.highest_in(lo, hi);
        ASSERT_EQ(k, best) << "[" << lo << "," << hi << "]";
        for (Index v = k; v <= hi; ++v) EXPECT_TRUE(s.in_subtree(k, v));
      }
    }
  }
}

TEST(BTreeShape, IndexOfRejectsOutOfRange) {
  const auto s = BTreeShape::full(3);
  EXPECT_EQ(kind_of([&] { s.index_of(0, 0); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([&] { s.index_of(2, 2); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([&] { s.highest_in(4, 2); }), ErrorKind::IndexOutOfRange);
}
