#pragma once

// Input graphs: plain edge-list graphs, forests, and rooted views of a
// connected vertex subset of a forest.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ugg/error.hpp"

namespace ugg {

using Vertex = std::int32_t;

struct InputEdge {
  Vertex u = 0;
  Vertex v = 0;
  friend constexpr bool operator==(const InputEdge&, const InputEdge&) = default;
};

/// Undirected simple graph on 0..n-1. Adjacency lists keep edge input order.
class Graph {
 public:
  Graph() = default;

  Graph(Vertex n, std::vector<InputEdge> edges) : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(n)) {
    detail::require(n >= 0, ErrorKind::InvalidSize, "negative vertex count");
    for (const InputEdge& e : edges_) {
      detail::require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n, ErrorKind::IndexOutOfRange,
                      "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside 0.." +
                          std::to_string(n - 1));
      detail::require(e.u != e.v, ErrorKind::DegenerateEdge, "self-loop at " + std::to_string(e.u));
      adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (const auto& list : adj_) {
      std::vector<Vertex> sorted = list;
      std::sort(sorted.begin(), sorted.end());
      detail::require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                      ErrorKind::MalformedInput, "multi-edge in input graph");
    }
  }

  Vertex size() const noexcept { return n_; }
  const std::vector<InputEdge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

 private:
  Vertex n_ = 0;
  std::vector<InputEdge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Acyclic graph. Components are listed by their lowest vertex id.
class Forest {
 public:
  Forest() = default;

  Forest(Vertex n, std::vector<InputEdge> edges) : graph_(n, std::move(edges)) {
    detail::require(static_cast<Vertex>(graph_.edges().size()) <= std::max<Vertex>(n - 1, 0),
                    ErrorKind::MalformedInput, "too many edges for a forest");
    std::vector<Vertex> comp(static_cast<std::size_t>(n), -1);
    for (Vertex s = 0; s < n; ++s) {
      if (comp[static_cast<std::size_t>(s)] >= 0) continue;
      const auto id = static_cast<Vertex>(components_.size());
      components_.emplace_back();
      std::vector<Vertex> stack{s};
      comp[static_cast<std::size_t>(s)] = id;
      std::size_t edge_ends = 0;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        components_.back().push_back(v);
        edge_ends += graph_.degree(v);
        for (Vertex w : graph_.neighbors(v)) {
          if (comp[static_cast<std::size_t>(w)] < 0) {
            comp[static_cast<std::size_t>(w)] = id;
            stack.push_back(w);
          }
        }
      }
      detail::require(edge_ends / 2 + 1 == components_.back().size(), ErrorKind::MalformedInput,
                      "input graph contains a cycle");
      std::sort(components_.back().begin(), components_.back().end());
    }
  }

  explicit Forest(const Graph& g) : Forest(g.size(), g.edges()) {}

  Vertex size() const noexcept { return graph_.size(); }
  const Graph& graph() const noexcept { return graph_; }
  const std::vector<InputEdge>& edges() const noexcept { return graph_.edges(); }
  const std::vector<std::vector<Vertex>>& components() const noexcept { return components_; }
  bool is_tree() const noexcept { return components_.size() == 1; }

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> components_;
};

/// A connected vertex subset of a forest, rooted at one of its vertices.
/// Local ids 0..size-1 follow DFS preorder; local 0 is the root. Child order
/// follows the adjacency order of the underlying graph.
class RootedTree {
 public:
  static constexpr Vertex kNone = -1;

  /// `members` must be sorted; it is the vertex set of the subtree.
  RootedTree(const Graph& g, std::vector<Vertex> members, Vertex root) : graph_(&g) {
    std::sort(members.begin(), members.end());
    detail::require(std::binary_search(members.begin(), members.end(), root), ErrorKind::PreconditionViolated,
                    "root " + std::to_string(root) + " not in vertex set");
    const std::size_t m = members.size();
    ids_.reserve(m);
    parent_.reserve(m);
    auto is_member = [&](Vertex v) { return std::binary_search(members.begin(), members.end(), v); };

    // Iterative DFS keeping child order, producing preorder local ids.
    struct Frame {
      Vertex global;
      Vertex parent_local;
      Vertex parent_global;
    };
    std::vector<Frame> stack{{root, kNone, kNone}};
    std::vector<std::pair<Vertex, Vertex>> links;
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      const auto local = static_cast<Vertex>(ids_.size());
      ids_.push_back(f.global);
      parent_.push_back(f.parent_local);
      if (f.parent_local != kNone) links.emplace_back(f.parent_local, local);
      const auto& nb = g.neighbors(f.global);
      for (auto it = nb.rbegin(); it != nb.rend(); ++it)
        if (*it != f.parent_global && is_member(*it)) stack.push_back({*it, local, f.global});
      detail::require(ids_.size() <= m, ErrorKind::MalformedInput, "vertex set contains a cycle");
    }
    detail::require(ids_.size() == m, ErrorKind::PreconditionViolated, "vertex set is not connected");

    children_.assign(m, {});
    for (const auto& [p, c] : links) children_[static_cast<std::size_t>(p)].push_back(c);
    size_.assign(m, 1);
    for (std::size_t i = m; i-- > 1;) size_[static_cast<std::size_t>(parent_[i])] += size_[i];
  }

  std::size_t size() const noexcept { return ids_.size(); }
  Vertex root() const noexcept { return ids_.front(); }
  const Graph& graph() const noexcept { return *graph_; }

  Vertex global(Vertex local) const { return ids_.at(static_cast<std::size_t>(local)); }
  Vertex local(Vertex global) const {
    const auto it = std::find(ids_.begin(), ids_.end(), global);
    detail::require(it != ids_.end(), ErrorKind::IndexOutOfRange, "vertex " + std::to_string(global) + " not in tree");
    return static_cast<Vertex>(it - ids_.begin());
  }
  Vertex parent(Vertex local) const { return parent_.at(static_cast<std::size_t>(local)); }
  const std::vector<Vertex>& children(Vertex local) const { return children_.at(static_cast<std::size_t>(local)); }
  std::size_t subtree_size(Vertex local) const { return size_.at(static_cast<std::size_t>(local)); }

  /// Global ids of the subtree below `local` (preorder makes it a contiguous run).
  std::vector<Vertex> subtree_vertices(Vertex local) const {
    const auto b = static_cast<std::size_t>(local);
    return {ids_.begin() + static_cast<std::ptrdiff_t>(b),
            ids_.begin() + static_cast<std::ptrdiff_t>(b + size_[b])};
  }

  const std::vector<Vertex>& vertices() const noexcept { return ids_; }

 private:
  const Graph* graph_;
  std::vector<Vertex> ids_;
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::size_t> size_;
};

/// Descending walk: returns a local vertex c with |T(c)| >= s while every
/// child subtree has fewer than s vertices. Ties go to the first child in order.
inline Vertex cut_vertex(const RootedTree& t, std::size_t s) {
  detail::require(t.size() >= 1 && s >= 1 && s <= t.size(), ErrorKind::InvalidS,
                  "s=" + std::to_string(s) + " outside 1.." + std::to_string(t.size()));
  Vertex c = 0;
  while (true) {
    Vertex next = RootedTree::kNone;
    for (Vertex d : t.children(c)) {
      if (t.subtree_size(d) >= s) {
        next = d;
        break;
      }
    }
    if (next == RootedTree::kNone) return c;
    c = next;
  }
}

}  // namespace ugg
