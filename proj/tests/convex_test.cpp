#include <gtest/gtest.h>

#include "ugg/convex.hpp"
#include "ugg/enumerate.hpp"

using ugg::ChordedCycle;
using ugg::ConvexHost;
using ugg::ErrorKind;
using ugg::Graph;
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

// Literal recursive construction: pi_1 = (1), pi_m = pi_{(m-1)/2} (m) pi_{(m-1)/2}.
std::vector<Index> pi_recursive(Index m) {
  if (m == 1) return {1};
  auto half = pi_recursive((m - 1) / 2);
  std::vector<Index> out = half;
  out.push_back(m);
  out.insert(out.end(), half.begin(), half.end());
  return out;
}

}  // namespace

TEST(PiSequence, Examples) {
  EXPECT_EQ(ugg::pi_sequence(10).terms, (std::vector<Index>{1, 3, 1, 7, 1, 3, 1, 15, 1, 3}));
  EXPECT_EQ(ugg::pi_sequence(1).terms, (std::vector<Index>{1}));
  const auto p15 = ugg::pi_sequence(15);
  EXPECT_EQ(p15.terms, (std::vector<Index>{1, 3, 1, 7, 1, 3, 1, 15, 1, 3, 1, 7, 1, 3, 1}));
  EXPECT_EQ(p15.sum(), 49);
  EXPECT_EQ(kind_of([] { ugg::pi_sequence(0); }), ErrorKind::InvalidSize);
}

TEST(PiSequence, MatchesRecursiveDefinitionAndSumFormula) {
  for (int h = 1; h <= 11; ++h) {
    const Index m = (Index{1} << h) - 1;
    const auto rec = pi_recursive(m);
    const auto p = ugg::pi_sequence(m);
    EXPECT_EQ(p.terms, rec);
    EXPECT_EQ(p.sum(), (h - 1) * (Index{1} << h) + 1);
  }
}

TEST(PiSequence, WindowPropertySmallPrefixes) {
  for (Index n = 1; n <= 300; ++n) EXPECT_TRUE(ugg::pi_window_property(ugg::pi_sequence(n)));
  ugg::PiSequence broken{3, {1, 1, 3}};
  EXPECT_FALSE(ugg::pi_window_property(broken));
}

TEST(CaterpillarHost, Examples) {
  const ConvexHost h7 = ugg::build_caterpillar_host(7);
  EXPECT_EQ(h7.neighbors(3).size(), 6u);
  EXPECT_EQ(h7.edge_count(), 16);
  EXPECT_EQ(ugg::build_caterpillar_host(1).edge_count(), 0);
  EXPECT_LE(ugg::build_caterpillar_host(2047).edge_count(), 2 * (10 * 2048 + 1));
  EXPECT_EQ(kind_of([] { ugg::build_caterpillar_host(0); }), ErrorKind::InvalidSize);
}

TEST(CaterpillarHost, AdjacencyRule) {
  for (Index n : {2, 5, 10, 16, 33}) {
    const ConvexHost h = ugg::build_caterpillar_host(n);
    const auto pi = ugg::pi_sequence(n);
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        EXPECT_EQ(h.is_edge(i, j), ugg::circular_distance(n, i, j) <= std::max(pi[i], pi[j]))
            << "n=" << n << " " << i << "," << j;
    EXPECT_LE(h.edge_count(), 2 * pi.sum());
  }
}

TEST(ConvexEdgesCross, Examples) {
  EXPECT_TRUE(ugg::convex_edges_cross(10, {0, 5}, {2, 7}));
  EXPECT_FALSE(ugg::convex_edges_cross(10, {0, 5}, {1, 3}));
  EXPECT_FALSE(ugg::convex_edges_cross(10, {0, 5}, {5, 8}));
  EXPECT_TRUE(ugg::convex_edges_cross(10, {7, 2}, {5, 0}));
  EXPECT_EQ(kind_of([] { ugg::convex_edges_cross(10, {3, 3}, {1, 2}); }), ErrorKind::DegenerateEdge);
  EXPECT_EQ(kind_of([] { ugg::convex_edges_cross(10, {3, 4}, {1, 12}); }), ErrorKind::IndexOutOfRange);
}

TEST(ChordedCycle, Validation) {
  const ChordedCycle g(10, {{9, 5}, {0, 3}});
  EXPECT_EQ(g.chords(), (std::vector<ugg::Edge>{{0, 3}, {5, 9}}));
  EXPECT_EQ(g.graph().edges().size(), 12u);
  EXPECT_EQ(kind_of([] { ChordedCycle(10, {{0, 1}}); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { ChordedCycle(10, {{0, 9}}); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { ChordedCycle(10, {{0, 3}, {3, 6}}); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { ChordedCycle(10, {{0, 5}, {2, 7}}); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { ChordedCycle(2, {}); }), ErrorKind::InvalidSize);
}

TEST(EmbedCaterpillar, Examples) {
  const ConvexHost host = ugg::build_caterpillar_host(7);
  const Graph two_stars(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}});
  const auto phi = ugg::embed_caterpillar(host, two_stars);
  EXPECT_EQ(phi[0], 1);
  EXPECT_EQ(phi[1], 3);
  EXPECT_TRUE(ugg::validate_embedding(host, two_stars, phi).ok());

  const Graph star(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}});
  EXPECT_EQ(ugg::embed_caterpillar(host, star)[0], 3);

  const Graph path(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  EXPECT_EQ(ugg::embed_caterpillar(host, path).map(), (std::vector<Index>{0, 1, 2, 3, 4, 5, 6}));
}

TEST(EmbedCaterpillar, Errors) {
  const ConvexHost host = ugg::build_caterpillar_host(7);
  const Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  EXPECT_EQ(kind_of([&] { ugg::embed_caterpillar(host, spider); }), ErrorKind::NotACaterpillar);
  EXPECT_FALSE(ugg::is_caterpillar(spider));
  const Graph split(7, {{0, 1}, {2, 3}});
  EXPECT_EQ(kind_of([&] { ugg::embed_caterpillar(host, split); }), ErrorKind::NotACaterpillar);
  const Graph small(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(kind_of([&] { ugg::embed_caterpillar(host, small); }), ErrorKind::SizeMismatch);
}

TEST(EmbedCaterpillar, SpineImagesIncreaseAndAllSmallCaterpillarsEmbed) {
  for (Vertex n = 1; n <= 12; ++n) {
    const ConvexHost host = ugg::build_caterpillar_host(n);
    for (const Graph& g : ugg::enumerate_caterpillars(n)) {
      const auto c = ugg::recognize_caterpillar(g);
      const auto phi = ugg::embed_caterpillar(host, c);
      for (std::size_t i = 1; i < c.spine.size(); ++i) EXPECT_LT(phi[c.spine[i - 1]], phi[c.spine[i]]);
      const auto report = ugg::validate_embedding(host, g, phi);
      ASSERT_TRUE(report.ok()) << "n=" << n << " " << report.summary();
    }
  }
}

TEST(TwoChordHost, StarSet) {
  EXPECT_EQ(ugg::twochord_set(10), (std::vector<Index>{0, 1, 2, 3, 6, 9}));
  EXPECT_EQ(ugg::twochord_set(4), (std::vector<Index>{0, 1, 2}));
  for (Index d = 1; d <= 5; ++d) EXPECT_TRUE(ugg::realizing_pair(ugg::twochord_set(10), d));
  EXPECT_EQ(ugg::realizing_pair(ugg::twochord_set(10), 4), std::make_pair(Index{2}, Index{6}));
  for (Index n = 3; n <= 2000; ++n) ASSERT_TRUE(ugg::twochord_covering(n)) << n;
  EXPECT_EQ(kind_of([] { ugg::build_twochord_host(2); }), ErrorKind::InvalidSize);
}

TEST(TwoChordHost, HasCycleAndStars) {
  const ConvexHost h = ugg::build_twochord_host(10);
  EXPECT_TRUE(h.has_spanning_cycle());
  for (Index c : ugg::twochord_set(10))
    for (Index v = 0; v < 10; ++v)
      if (v != c) {
        EXPECT_TRUE(h.is_edge(c, v));
      }
  EXPECT_FALSE(h.is_edge(4, 7));
}

TEST(EmbedTwoChord, Examples) {
  const ConvexHost h10 = ugg::build_twochord_host(10);
  const ChordedCycle g10(10, {{0, 3}, {5, 9}});
  const auto phi = ugg::embed_twochord(h10, g10);
  EXPECT_EQ(phi[9], 0);
  EXPECT_EQ(phi[0], 1);
  EXPECT_EQ(phi[3], 4);
  EXPECT_EQ(phi[5], 6);
  EXPECT_TRUE(ugg::validate_embedding(h10, g10.graph(), phi).ok());

  const ConvexHost h6 = ugg::build_twochord_host(6);
  const ChordedCycle g6(6, {{0, 2}, {3, 5}});
  const auto phi6 = ugg::embed_twochord(h6, g6);
  EXPECT_EQ(phi6[2], 0);
  EXPECT_EQ(phi6[3], 1);
  EXPECT_TRUE(ugg::validate_embedding(h6, g6.graph(), phi6).ok());
}

TEST(EmbedTwoChord, Errors) {
  const ConvexHost h10 = ugg::build_twochord_host(10);
  EXPECT_EQ(kind_of([&] { ugg::embed_twochord(h10, ChordedCycle(10, {{0, 3}})); }), ErrorKind::NotTwoChord);
  const ConvexHost h12 = ugg::build_twochord_host(12);
  EXPECT_EQ(kind_of([&] { ugg::embed_twochord(h12, ChordedCycle(10, {{0, 3}, {5, 9}})); }),
            ErrorKind::SizeMismatch);
}

TEST(EmbedTwoChord, EveryMemberUpToTwenty) {
  for (Index n = 6; n <= 20; ++n) {
    const ConvexHost host = ugg::build_twochord_host(n);
    for (const ChordedCycle& g : ugg::enumerate_chorded_cycles(n, 2)) {
      const auto report = ugg::validate_embedding(host, g.graph(), ugg::embed_twochord(host, g));
      ASSERT_TRUE(report.ok()) << "n=" << n << " " << report.summary();
    }
  }
}
