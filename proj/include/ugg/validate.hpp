#pragma once

// Embedding validation: injectivity, edge membership, pairwise noncrossing.
// Failures are data, each with a witness.

#include <algorithm>
#include <string>
#include <vector>

#include "ugg/embedding.hpp"
#include "ugg/geometry.hpp"
#include "ugg/trees.hpp"
#include "ugg/ugraph.hpp"

namespace ugg {

enum class FailureKind { NotInjective, MissingEdge, Crossing, SizeMismatch };

inline std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::NotInjective: return "NotInjective";
    case FailureKind::MissingEdge: return "MissingEdge";
    case FailureKind::Crossing: return "Crossing";
    case FailureKind::SizeMismatch: return "SizeMismatch";
  }
  return "Unknown";
}

struct Failure {
  FailureKind kind;
  std::vector<Index> witness;  // vertices, or the endpoints of the edges involved
  std::string detail;
};

struct ValidationReport {
  std::vector<Failure> failures;

  bool ok() const noexcept { return failures.empty(); }
  std::string status() const { return ok() ? "ok" : "failed"; }
  std::string summary() const {
    if (ok()) return "ok";
    std::string out = "failed:";
    for (const Failure& f : failures) {
      out += " " + to_string(f.kind) + "(";
      for (std::size_t i = 0; i < f.witness.size(); ++i) out += (i ? "," : "") + std::to_string(f.witness[i]);
      out += ")";
    }
    return out;
  }
};

/// Host-agnostic validation. `is_edge(u, v)` and `cross(Edge, Edge)` decide
/// membership and crossing for host vertex pairs.
template <class IsEdge, class Cross>
ValidationReport validate_with(Index host_size, const Graph& input, const std::vector<Index>& map,
                               const IsEdge& is_edge, const Cross& cross, std::size_t max_failures = 32) {
  ValidationReport report;
  auto add = [&](Failure f) {
    if (report.failures.size() < max_failures) report.failures.push_back(std::move(f));
  };
  if (static_cast<Index>(map.size()) != input.size() || input.size() > host_size) {
    add({FailureKind::SizeMismatch, {static_cast<Index>(map.size()), static_cast<Index>(input.size()), host_size},
         "map/input/host sizes disagree"});
    return report;
  }
  std::vector<Index> owner(static_cast<std::size_t>(host_size), -1);
  for (Vertex v = 0; v < input.size(); ++v) {
    const Index g = map[static_cast<std::size_t>(v)];
    if (g < 0 || g >= host_size) {
      add({FailureKind::SizeMismatch, {v, g}, "vertex mapped outside the host"});
      continue;
    }
    Index& slot = owner[static_cast<std::size_t>(g)];
    if (slot >= 0)
      add({FailureKind::NotInjective, {slot, v}, "both map to host vertex " + std::to_string(g)});
    else
      slot = v;
  }
  if (!report.ok()) return report;

  std::vector<Edge> image;
  image.reserve(input.edges().size());
  for (const InputEdge& e : input.edges()) {
    const Index a = map[static_cast<std::size_t>(e.u)];
    const Index b = map[static_cast<std::size_t>(e.v)];
    if (!is_edge(a, b)) add({FailureKind::MissingEdge, {a, b}, "host has no edge for input edge"});
    image.push_back(Edge::make(a, b));
  }
  std::sort(image.begin(), image.end());
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      if (cross(image[i], image[j]))
        add({FailureKind::Crossing, {image[i].u, image[i].v, image[j].u, image[j].v}, "image edges cross"});
    }
  }
  return report;
}

inline ValidationReport validate_embedding(const UniversalGraph& host, const Graph& input, const Embedding& phi) {
  return validate_with(
      host.size(), input, phi.map(), [&](Index a, Index b) { return a != b && host.is_edge(a, b); },
      [&](Edge e1, Edge e2) {
        // Disjoint x-ranges never cross; skip the height lookups.
        if (e1.v < e2.u || e2.v < e1.u) return false;
        return edges_cross(host, e1, e2);
      });
}

}  // namespace ugg
