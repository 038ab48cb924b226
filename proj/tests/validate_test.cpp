#include <gtest/gtest.h>

#include "ugg/audit.hpp"
#include "ugg/validate.hpp"

using ugg::Embedding;
using ugg::FailureKind;
using ugg::Graph;
using ugg::HostKind;
using ugg::Index;

namespace {

Embedding on7(std::vector<Index> map) { return Embedding(HostKind::universal, 7, std::move(map)); }

}  // namespace

TEST(Validate, EmptyGraphIsFine) {
  const auto host = ugg::build_universal(7);
  EXPECT_TRUE(ugg::validate_embedding(host, Graph(0, {}), on7({})).ok());
  EXPECT_EQ(ugg::validate_embedding(host, Graph(0, {}), on7({})).summary(), "ok");
}

TEST(Validate, NotInjective) {
  const auto host = ugg::build_universal(7);
  const auto r = ugg::validate_embedding(host, Graph(3, {{0, 1}}), on7({2, 2, 5}));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failures.front().kind, FailureKind::NotInjective);
  EXPECT_EQ(r.failures.front().witness, (std::vector<Index>{0, 1}));
  EXPECT_EQ(r.status(), "failed");
}

TEST(Validate, Crossing) {
  const auto host = ugg::build_universal(7);
  const auto r = ugg::validate_embedding(host, Graph(4, {{0, 1}, {2, 3}}), on7({1, 3, 2, 5}));
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures.front().kind, FailureKind::Crossing);
  EXPECT_EQ(r.failures.front().witness, (std::vector<Index>{1, 3, 2, 5}));
  EXPECT_EQ(r.summary(), "failed: Crossing(1,3,2,5)");
}

TEST(Validate, MissingEdge) {
  const auto host = ugg::build_universal(15);
  const auto r = ugg::validate_embedding(host, Graph(2, {{0, 1}}), Embedding(HostKind::universal, 15, {3, 13}));
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures.front().kind, FailureKind::MissingEdge);
}

TEST(Validate, SizeProblems) {
  const auto host = ugg::build_universal(7);
  EXPECT_EQ(ugg::validate_embedding(host, Graph(3, {}), on7({0, 1})).failures.front().kind, FailureKind::SizeMismatch);
  EXPECT_EQ(ugg::validate_embedding(host, Graph(2, {}), on7({0, 9})).failures.front().kind, FailureKind::SizeMismatch);
  EXPECT_EQ(ugg::validate_embedding(host, Graph(2, {}), on7({-1, 0})).failures.front().kind,
            FailureKind::SizeMismatch);
}

TEST(Validate, FailureListIsCapped) {
  const Graph g(8, {});
  const std::vector<Index> map(8, 0);
  const auto r = ugg::validate_with(8, g, map, [](Index, Index) { return true; }, [](ugg::Edge, ugg::Edge) { return false; }, 3);
  EXPECT_EQ(r.failures.size(), 3u);
}

TEST(Audit, FlagsAPortalOffTheTop) {
  const auto host = ugg::build_universal(7);
  const Graph g(2, {{0, 1}});
  Embedding phi = on7({1, 2});
  phi.trace().push_back({{"base", {1, 2}, 0, -1, 0}, {0, 1}, {{0, 2}, {1, 1}}});
  EXPECT_FALSE(ugg::audit_trace(host, g, phi).ok());
  phi.trace().front().image = {{0, 1}, {1, 2}};
  EXPECT_TRUE(ugg::audit_trace(host, g, phi).ok());
}

TEST(Audit, FlagsAVertexInsideTheQuarterPlane) {
  // Portal 0 is a leaf of the piece 0-1-2; Q-(phi(1)) must miss phi({1,2}).
  const auto host = ugg::build_universal(7);
  const auto coords = ugg::realize_coordinates(host.shape(), 7);
  const Graph g(3, {{0, 1}, {1, 2}});
  Embedding phi = on7({0, 6, 4});
  phi.trace().push_back({{"x", {0, 6}, 0, -1, 0}, {0, 1, 2}, {{0, 0}, {1, 6}, {2, 4}}});
  EXPECT_FALSE(ugg::audit_trace(host, g, phi).ok());
  EXPECT_FALSE(ugg::audit_trace(host, g, phi, &coords).ok());
  phi.trace().front().image = {{0, 0}, {1, 4}, {2, 6}};
  const auto report = ugg::audit_trace(host, g, phi, &coords);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.region_checks, 1u);
}

TEST(Audit, DualPortalsMustBeOrdered) {
  const auto host = ugg::build_universal(7);
  const Graph g(2, {{0, 1}});
  Embedding phi = on7({2, 1});
  phi.trace().push_back({{"x", {1, 2}, 0, 1, 0}, {0, 1}, {{0, 2}, {1, 1}}});
  EXPECT_FALSE(ugg::audit_trace(host, g, phi).ok());
}
