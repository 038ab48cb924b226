#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ugg/btree.hpp"
#include "ugg/trees.hpp"

namespace ugg {

/// One input vertex placed on one host vertex.
struct Assignment {
  Vertex vertex = 0;
  Index host = 0;
  friend constexpr bool operator==(const Assignment&, const Assignment&) = default;
};

/// Placement of some input vertices; used for recursive pieces.
using PartialMap = std::vector<Assignment>;

inline std::optional<Index> host_of(const PartialMap& map, Vertex v) {
  for (const Assignment& a : map)
    if (a.vertex == v) return a.host;
  return std::nullopt;
}

enum class HostKind { universal, caterpillar, twochord, complete, custom };

inline std::string to_string(HostKind kind) {
  switch (kind) {
    case HostKind::universal: return "universal";
    case HostKind::caterpillar: return "caterpillar";
    case HostKind::twochord: return "twochord";
    case HostKind::complete: return "complete";
    case HostKind::custom: return "custom";
  }
  return "custom";
}

/// Audit record of one recursive step.
struct Provenance {
  std::string label;  // "base", "1.1", "1.2.1", ..., "2"
  IndexRange interval;
  Vertex portal_a = -1;
  Vertex portal_b = -1;  // -1 for single-portal calls
  int depth = 0;
};

/// Snapshot of a recursive call's own result, kept when tracing is enabled.
struct TraceRecord {
  Provenance step;
  std::vector<Vertex> piece;  // input vertices of the embedded subtree
  PartialMap image;           // that call's placement, before any parent rewrites it
};

class Embedding {
 public:
  Embedding() = default;
  Embedding(HostKind target, Index host_size, std::vector<Index> map)
      : target_(target), host_size_(host_size), map_(std::move(map)) {}

  HostKind target() const noexcept { return target_; }
  Index host_size() const noexcept { return host_size_; }
  std::size_t size() const noexcept { return map_.size(); }

  /// Host vertex of input vertex v, or -1 if unmapped.
  Index operator[](Vertex v) const { return map_.at(static_cast<std::size_t>(v)); }
  const std::vector<Index>& map() const noexcept { return map_; }
  std::vector<Index>& map() noexcept { return map_; }

  std::vector<Provenance>& provenance() noexcept { return provenance_; }
  const std::vector<Provenance>& provenance() const noexcept { return provenance_; }
  std::vector<TraceRecord>& trace() noexcept { return trace_; }
  const std::vector<TraceRecord>& trace() const noexcept { return trace_; }

 private:
  HostKind target_ = HostKind::universal;
  Index host_size_ = 0;
  std::vector<Index> map_;
  std::vector<Provenance> provenance_;
  std::vector<TraceRecord> trace_;
};

}  // namespace ugg
