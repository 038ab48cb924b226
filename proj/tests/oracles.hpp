#pragma once

// Slow, literal reference implementations used as test oracles. Nothing here
// calls into the library's index arithmetic.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

namespace oracle {

/// Full binary tree of height h built node by node in preorder.
struct ExplicitTree {
  struct Node {
    int parent = -1;
    int left = -1;
    int right = -1;
    int level = 0;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<int>> levels;  // left-to-right node ids per level (index 0 = level 1)
  std::vector<int> bfs_rank;             // rank in the right-first BFS (0 = visited first)

  explicit ExplicitTree(int h) {
    levels.resize(static_cast<std::size_t>(h));
    build(-1, 1, h);
    std::deque<int> queue{0};
    bfs_rank.assign(nodes.size(), -1);
    int rank = 0;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      bfs_rank[static_cast<std::size_t>(v)] = rank++;
      const Node& nd = nodes[static_cast<std::size_t>(v)];
      if (nd.right >= 0) queue.push_back(nd.right);
      if (nd.left >= 0) queue.push_back(nd.left);
    }
  }

  int size() const { return static_cast<int>(nodes.size()); }

  bool higher(int u, int w) const { return bfs_rank[static_cast<std::size_t>(u)] < bfs_rank[static_cast<std::size_t>(w)]; }

  bool in_subtree(int root, int v) const {
    for (int x = v; x >= 0; x = nodes[static_cast<std::size_t>(x)].parent)
      if (x == root) return true;
    return false;
  }

  int level_neighbor(int v, int delta) const {
    const auto& row = levels[static_cast<std::size_t>(nodes[static_cast<std::size_t>(v)].level - 1)];
    const auto at = std::find(row.begin(), row.end(), v) - row.begin() + delta;
    if (at < 0 || at >= static_cast<long>(row.size())) return -1;
    return row[static_cast<std::size_t>(at)];
  }

  /// Ancestry, subtree of a level-neighbor, or subtree of the
  /// left level-neighbor of the parent; checked in both directions.
  bool directed(int u, int w) const {
    if (in_subtree(u, w)) return true;
    for (int d : {-1, +1}) {
      const int nb = level_neighbor(u, d);
      if (nb >= 0 && in_subtree(nb, w)) return true;
    }
    const int p = nodes[static_cast<std::size_t>(u)].parent;
    if (p >= 0) {
      const int pl = level_neighbor(p, -1);
      if (pl >= 0 && in_subtree(pl, w)) return true;
    }
    return false;
  }

  bool is_edge(int u, int w) const { return u != w && (directed(u, w) || directed(w, u)); }

 private:
  int build(int parent, int level, int h) {
    const int id = static_cast<int>(nodes.size());
    nodes.push_back({parent, -1, -1, level});
    levels[static_cast<std::size_t>(level - 1)].push_back(id);
    if (level < h) {
      const int l = build(id, level + 1, h);
      nodes[static_cast<std::size_t>(id)].left = l;
      const int r = build(id, level + 1, h);
      nodes[static_cast<std::size_t>(id)].right = r;
    }
    return id;
  }
};

inline int height_for(std::int64_t n) {
  int h = 1;
  while ((std::int64_t{1} << h) - 1 < n) ++h;
  return h;
}

}  // namespace oracle
