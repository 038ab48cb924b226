#pragma once

// Post-hoc checks of the per-call guarantees recorded in an embedding trace:
// single-portal calls put the portal on the interval's highest vertex and,
// when the portal is a leaf, keep Q-(phi(a')) clear of phi(T(a')); two-portal
// calls keep a left of b and Q-(phi(a)), Q+(phi(b)) clear of phi(T).

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ugg/embedding.hpp"
#include "ugg/geometry.hpp"
#include "ugg/trees.hpp"
#include "ugg/ugraph.hpp"

namespace ugg {

struct AuditReport {
  std::size_t calls = 0;
  std::size_t region_checks = 0;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

namespace detail {

struct ImagePiece {
  std::vector<Index> vertices;
  std::vector<Edge> edges;
};

inline ImagePiece image_of(const Graph& input, const TraceRecord& rec, const std::vector<Vertex>& keep) {
  ImagePiece out;
  auto kept = [&](Vertex v) { return std::find(keep.begin(), keep.end(), v) != keep.end(); };
  for (const Assignment& a : rec.image)
    if (kept(a.vertex)) out.vertices.push_back(a.host);
  for (Vertex v : keep)
    for (Vertex w : input.neighbors(v))
      if (v < w && kept(w)) out.edges.push_back(Edge::make(*host_of(rec.image, v), *host_of(rec.image, w)));
  return out;
}

}  // namespace detail

/// `coords` enables the exact segment tests; without it only vertex
/// membership is checked, from the height order alone.
inline AuditReport audit_trace(const UniversalGraph& host, const Graph& input, const Embedding& phi,
                               const CoordinateRealization* coords = nullptr) {
  AuditReport report;
  auto higher = [&](Index a, Index b) { return host.higher(a, b); };
  auto region_clear = [&](const QuarterPlane& qp, const detail::ImagePiece& img, const std::string& where) {
    ++report.region_checks;
    for (Index v : img.vertices) {
      const bool inside = coords ? quarter_plane_contains_point(*coords, qp, (*coords)[v])
                                 : quarter_plane_contains_vertex(higher, qp, v);
      if (inside) {
        report.violations.push_back(where + ": vertex " + std::to_string(v) + " inside the quarter-plane at " +
                                    std::to_string(qp.apex));
        return;
      }
    }
    if (!coords) return;
    for (const Edge& e : img.edges) {
      if (quarter_plane_meets_segment(*coords, qp, e)) {
        report.violations.push_back(where + ": edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") meets the quarter-plane at " + std::to_string(qp.apex));
        return;
      }
    }
  };

  for (const TraceRecord& rec : phi.trace()) {
    ++report.calls;
    const Provenance& step = rec.step;
    const std::string where = "case " + step.label + " on [" + std::to_string(step.interval.lo) + "," +
                              std::to_string(step.interval.hi) + "]";
    const std::optional<Index> at_a = host_of(rec.image, step.portal_a);
    if (!at_a) {
      report.violations.push_back(where + ": portal a unmapped");
      continue;
    }
    if (step.portal_b < 0) {
      if (*at_a != host.highest_in(step.interval))
        report.violations.push_back(where + ": portal not on the highest vertex");
      std::vector<Vertex> inside;
      for (Vertex w : input.neighbors(step.portal_a))
        if (std::find(rec.piece.begin(), rec.piece.end(), w) != rec.piece.end()) inside.push_back(w);
      if (inside.size() != 1) continue;
      std::vector<Vertex> below = rec.piece;
      std::erase(below, step.portal_a);
      region_clear({*host_of(rec.image, inside.front()), QuarterSide::left}, detail::image_of(input, rec, below),
                   where);
    } else {
      const std::optional<Index> at_b = host_of(rec.image, step.portal_b);
      if (!at_b || *at_a >= *at_b) {
        report.violations.push_back(where + ": portal a not left of portal b");
        continue;
      }
      const detail::ImagePiece img = detail::image_of(input, rec, rec.piece);
      region_clear({*at_a, QuarterSide::left}, img, where);
      region_clear({*at_b, QuarterSide::right}, img, where);
    }
  }
  return report;
}

}  // namespace ugg
