#include <gtest/gtest.h>

#include <random>

#include "ugg/enumerate.hpp"

using ugg::ChordedCycle;
using ugg::ErrorKind;
using ugg::Index;
using ugg::Vertex;

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

// Unlabeled forests and trees on n vertices, from an independent computation
// (graph atlas enumeration and the Euler transform of the tree counts).
const std::size_t kForests[] = {1, 2, 3, 6, 10, 20, 37, 76, 153, 329, 710, 1601};
const std::size_t kTrees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};

}  // namespace

TEST(EnumerateForests, FrozenCounts) {
  for (Vertex n = 1; n <= 12; ++n) {
    EXPECT_EQ(ugg::enumerate_forests(n).size(), kForests[n - 1]) << "n=" << n;
    EXPECT_EQ(ugg::enumerate_trees(n).size(), kTrees[n - 1]) << "n=" << n;
  }
}

TEST(EnumerateForests, MatchesBruteForce) {
  for (int n = 1; n <= 7; ++n)
    EXPECT_EQ(ugg::enumerate_forests(static_cast<Vertex>(n)).size(), ugg::count_forests_bruteforce(n)) << n;
}

TEST(EnumerateForests, MembersAreForestsOfTheRightSize) {
  for (const auto& f : ugg::enumerate_forests(8)) EXPECT_EQ(f.size(), 8);
  std::size_t trees = 0;
  for (const auto& f : ugg::enumerate_forests(7)) trees += f.is_tree();
  EXPECT_EQ(trees, 11u);
}

TEST(EnumerateForests, Caps) {
  EXPECT_EQ(kind_of([] { ugg::enumerate_forests(13); }), ErrorKind::SizeTooLarge);
  EXPECT_EQ(kind_of([] { ugg::enumerate_forests(0); }), ErrorKind::InvalidSize);
  EXPECT_EQ(kind_of([] { ugg::enumerate_caterpillars(15); }), ErrorKind::SizeTooLarge);
}

TEST(EnumerateCaterpillars, Counts) {
  EXPECT_EQ(ugg::enumerate_caterpillars(3).size(), 1u);
  EXPECT_EQ(ugg::enumerate_caterpillars(5).size(), 3u);
  for (Vertex n = 1; n <= 14; ++n) {
    const auto cats = ugg::enumerate_caterpillars(n);
    EXPECT_EQ(cats.size(), ugg::caterpillar_count_formula(n)) << n;
    for (const auto& g : cats) EXPECT_TRUE(ugg::is_caterpillar(g));
  }
}

TEST(EnumerateCaterpillars, AgreesWithFilteredTrees) {
  for (Vertex n = 1; n <= 11; ++n) {
    std::size_t filtered = 0;
    for (const auto& t : ugg::enumerate_trees(n)) filtered += ugg::is_caterpillar(t);
    EXPECT_EQ(ugg::enumerate_caterpillars(n).size(), filtered) << n;
  }
}

TEST(EnumerateChorded, Examples) {
  EXPECT_EQ(ugg::enumerate_chorded_cycles(6, 1).size(), 2u);
  EXPECT_EQ(ugg::enumerate_chorded_cycles(6, 2).size(), 1u);
  EXPECT_EQ(ugg::enumerate_chorded_cycles(4, 1).size(), 1u);
  EXPECT_EQ(kind_of([] { ugg::enumerate_chorded_cycles(5, 2); }), ErrorKind::InvalidSize);
  EXPECT_EQ(ugg::enumerate_chorded_cycles(12, 3).size(), 52u);
  EXPECT_EQ(kind_of([] { ugg::enumerate_chorded_cycles(31, 1); }), ErrorKind::SizeTooLarge);
  EXPECT_EQ(kind_of([] { ugg::enumerate_chorded_cycles(10, 4); }), ErrorKind::SizeTooLarge);
}

TEST(EnumerateChorded, MatchesBurnside) {
  for (Index n = 4; n <= 12; ++n)
    for (Index h = 0; 2 * h + 2 <= n && h <= 3; ++h)
      EXPECT_EQ(ugg::enumerate_chorded_cycles(n, h).size(), ugg::count_chorded_classes_burnside(n, h))
          << "n=" << n << " h=" << h;
}

TEST(UniversalConvex, Certifier) {
  for (Index n = 4; n <= 12; ++n)
    for (Index h = 1; 2 * h + 2 <= n && h <= 3; ++h)
      EXPECT_TRUE(ugg::check_universal_convex(ugg::build_complete_convex(n), ugg::enumerate_chorded_cycles(n, h))
                      .universal);
  const auto r = ugg::check_universal_convex(ugg::build_cycle_host(6), ugg::enumerate_chorded_cycles(6, 1));
  EXPECT_FALSE(r.universal);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(r.counterexample->chord_count(), 1);
  const auto tc = ugg::check_universal_convex(ugg::build_twochord_host(20), ugg::enumerate_chorded_cycles(20, 2));
  EXPECT_TRUE(tc.universal);
  EXPECT_GT(tc.checked, 0u);
  const ugg::ConvexHost open_path(5, ugg::ConvexKind::custom, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(kind_of([&] { ugg::check_universal_convex(open_path, {}); }), ErrorKind::NoSpanningCycle);
}

TEST(RandomTree, ValidAndDeterministic) {
  std::mt19937_64 a(42), b(42);
  for (Vertex n : {1, 2, 3, 10, 200}) {
    const auto g = ugg::random_labeled_tree(n, a);
    EXPECT_TRUE(ugg::Forest(g).is_tree());
    EXPECT_EQ(g.edges(), ugg::random_labeled_tree(n, b).edges());
  }
}
