#pragma once

// Crossing decisions for host edges.
//
// edges_cross() is purely combinatorial: it needs the x-order (the indices)
// and the height order, and is valid for every coordinate assignment in which
// each vertex lies above all lines through two lower vertices.
// realize_coordinates() builds one such assignment with exact integers; it is
// the reference that edges_cross() is tested against.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ugg/btree.hpp"
#include "ugg/error.hpp"
#include "ugg/ugraph.hpp"

namespace ugg {

using BigInt = boost::multiprecision::cpp_int;

/// Combinatorial crossing test. `higher(u, w)` must be the strict height order.
template <class Higher>
bool edges_cross_by(const Higher& higher, Edge e1, Edge e2) {
  detail::require(e1.u != e1.v && e2.u != e2.v, ErrorKind::DegenerateEdge, "edge with equal endpoints");
  Index p = std::min(e1.u, e1.v), q = std::max(e1.u, e1.v);
  Index r = std::min(e2.u, e2.v), s = std::max(e2.u, e2.v);
  if (p == r || p == s || q == r || q == s) return false;
  if (r < p) {
    std::swap(p, r);
    std::swap(q, s);
  }
  if (q < r) return false;  // disjoint x-ranges

  auto top = [&](std::initializer_list<Index> vs) {
    Index best = *vs.begin();
    for (Index v : vs)
      if (v != best && higher(v, best)) best = v;
    return best;
  };
  const Index max4 = top({p, q, r, s});
  auto above_both = [&](Index v, Index a, Index b) { return higher(v, a) && higher(v, b); };

  if (s < q) {  // nested: p < r < s < q
    if (max4 == p || max4 == q) return false;
    if (max4 == r) return !above_both(s, p, q);
    return !above_both(r, p, q);
  }
  // interleaved: p < r < q < s
  if (max4 == q || max4 == r) return false;
  if (max4 == p) return !above_both(q, r, s);
  return !above_both(r, p, q);
}

inline bool edges_cross(const BTreeShape& shape, Edge e1, Edge e2) {
  for (Index v : {e1.u, e1.v, e2.u, e2.v})
    detail::require(v >= 0 && v < shape.size(), ErrorKind::IndexOutOfRange,
                    "endpoint " + std::to_string(v) + " outside [0," + std::to_string(shape.size() - 1) + "]");
  return edges_cross_by([&](Index a, Index b) { return shape.higher(a, b); }, e1, e2);
}

inline bool edges_cross(const UniversalGraph& g, Edge e1, Edge e2) {
  for (Index v : {e1.u, e1.v, e2.u, e2.v})
    detail::require(v >= 0 && v < g.size(), ErrorKind::IndexOutOfRange,
                    "endpoint " + std::to_string(v) + " outside host");
  return edges_cross_by([&](Index a, Index b) { return g.higher(a, b); }, e1, e2);
}

struct Point {
  Index x = 0;
  BigInt y = 0;
};

/// Sign of the orientation of (a, b, c): +1 left turn, -1 right turn, 0 collinear.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  const BigInt det = BigInt(b.x - a.x) * (c.y - a.y) - (b.y - a.y) * BigInt(c.x - a.x);
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

namespace detail {

inline BigInt floor_div(const BigInt& num, const BigInt& den) {
  // den > 0
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

}  // namespace detail

class CoordinateRealization {
 public:
  static constexpr Index kDefaultCap = 63;

  CoordinateRealization() = default;
  explicit CoordinateRealization(std::vector<Point> points) : points_(std::move(points)) {}

  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](Index i) const {
    detail::require(i >= 0 && static_cast<std::size_t>(i) < points_.size(), ErrorKind::IndexOutOfRange,
                    "vertex " + std::to_string(i) + " has no coordinates");
    return points_[static_cast<std::size_t>(i)];
  }
  const std::vector<Point>& points() const noexcept { return points_; }

 private:
  std::vector<Point> points_;
};

/// Exact coordinates with x(i) = i and y increasing along the height order,
/// every vertex strictly above each line through two lower vertices.
inline CoordinateRealization realize_coordinates(const BTreeShape& shape, Index n,
                                                 Index cap = CoordinateRealization::kDefaultCap) {
  detail::require(n >= 1, ErrorKind::InvalidSize, "need at least one vertex");
  detail::require(n <= cap, ErrorKind::SizeTooLarge,
                  "exact coordinates capped at n=" + std::to_string(cap));
  detail::require(n <= shape.node_count(), ErrorKind::IndexOutOfRange, "n exceeds tree size");

  std::vector<Index> order(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return shape.higher(b, a); });

  std::vector<Point> pts(static_cast<std::size_t>(n));
  std::vector<Index> placed;
  BigInt top = -1;
  for (Index v : order) {
    BigInt y = top + 1;
    for (std::size_t a = 0; a < placed.size(); ++a) {
      for (std::size_t b = a + 1; b < placed.size(); ++b) {
        const Point& pa = pts[static_cast<std::size_t>(placed[a])];
        const Point& pb = pts[static_cast<std::size_t>(placed[b])];
        BigInt dx = pb.x - pa.x;
        BigInt num = pa.y * dx + (pb.y - pa.y) * BigInt(v - pa.x);
        if (dx < 0) {
          dx = -dx;
          num = -num;
        }
        const BigInt above = detail::floor_div(num, dx) + 1;
        if (above > y) y = above;
      }
    }
    pts[static_cast<std::size_t>(v)] = Point{v, y};
    top = y;
    placed.push_back(v);
  }
  return CoordinateRealization(std::move(pts));
}

/// Proper crossing of two closed segments: a common point interior to both.
inline bool segments_cross_exact(const CoordinateRealization& c, Edge e1, Edge e2) {
  const Point& a = c[e1.u];
  const Point& b = c[e1.v];
  const Point& p = c[e2.u];
  const Point& q = c[e2.v];
  if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) return false;
  const int o1 = orientation(a, b, p);
  const int o2 = orientation(a, b, q);
  const int o3 = orientation(p, q, a);
  const int o4 = orientation(p, q, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

enum class QuarterSide { left, right };

/// Open region above `apex` and strictly left (Q-) or right (Q+) of it.
struct QuarterPlane {
  Index apex = 0;
  QuarterSide side = QuarterSide::left;
};

/// Vertex membership from the combinatorial orders alone.
template <class Higher>
bool quarter_plane_contains_vertex(const Higher& higher, const QuarterPlane& qp, Index v) {
  if (v == qp.apex) return false;
  const bool x_ok = qp.side == QuarterSide::left ? v < qp.apex : v > qp.apex;
  return x_ok && higher(v, qp.apex);
}

inline bool quarter_plane_contains_point(const CoordinateRealization& c, const QuarterPlane& qp,
                                         const Point& pt) {
  const Point& apex = c[qp.apex];
  const bool x_ok = qp.side == QuarterSide::left ? pt.x < apex.x : pt.x > apex.x;
  return x_ok && pt.y > apex.y;
}

/// Does the closed segment between two realized vertices meet the open quarter-plane?
inline bool quarter_plane_meets_segment(const CoordinateRealization& c, const QuarterPlane& qp, Edge e) {
  const Point& apex = c[qp.apex];
  Point a = c[e.u];
  Point b = c[e.v];
  if (quarter_plane_contains_point(c, qp, a) || quarter_plane_contains_point(c, qp, b)) return true;
  auto inside_x = [&](const Point& pt) { return qp.side == QuarterSide::left ? pt.x < apex.x : pt.x > apex.x; };
  if (inside_x(a) == inside_x(b)) return false;  // both outside the slab, or both inside but too low
  if (!inside_x(a)) std::swap(a, b);             // a inside the x-slab, b outside or on the boundary
  // The segment leaves the slab at x = apex.x; it meets the open region iff its
  // height there exceeds apex.y (a itself is already known to be too low).
  const BigInt dx = BigInt(b.x - a.x);
  const BigInt rise = (b.y - a.y) * BigInt(apex.x - a.x);  // y(apex.x) = a.y + rise / dx
  // Compare a.y + rise/dx > apex.y with dx possibly negative.
  const BigInt lhs = a.y * dx + rise;
  const BigInt rhs = apex.y * dx;
  return dx > 0 ? lhs > rhs : lhs < rhs;
}

}  // namespace ugg
