#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sociogrow {

using NodeId = int;

// Undirected simple graph over dense node ids 0..n-1. Adjacency lists are
// kept in insertion order; no self-loops, no duplicate edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int node_count) : adj_(node_count) {}

  int node_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  // New node gets id == previous node_count, degree 0.
  NodeId add_node() {
    adj_.emplace_back();
    return static_cast<NodeId>(adj_.size()) - 1;
  }

  // Returns true if the edge was inserted, false if it already existed.
  // Throws on self-loops and unknown ids.
  bool add_edge(NodeId i, NodeId j);

  bool has_edge(NodeId i, NodeId j) const;
  bool has_node(NodeId i) const {
    return i >= 0 && i < static_cast<NodeId>(adj_.size());
  }

  std::span<const NodeId> neighbors(NodeId i) const;
  int degree(NodeId i) const;

  // All edges as (min, max) pairs sorted lexicographically.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

 private:
  void require_node(NodeId i) const;

  std::vector<std::vector<NodeId>> adj_;
  std::size_t edge_count_ = 0;
};

// Fully connected graph on n >= 1 nodes (n(n-1)/2 edges).
Graph complete_graph(int n);

// BFS rings around an anchor node. level(1) holds the anchor's neighbors,
// level(2) their unseen neighbors, and so on. Nodes unreachable from the
// anchor do not appear. Each level is sorted ascending.
class LevelDecomposition {
 public:
  LevelDecomposition(NodeId anchor, std::vector<std::vector<NodeId>> levels)
      : anchor_(anchor), levels_(std::move(levels)) {}

  NodeId anchor() const { return anchor_; }
  int level_count() const { return static_cast<int>(levels_.size()); }

  // x is 1-based: level(1) = nodes at distance 1.
  std::span<const NodeId> level(int x) const;

 private:
  NodeId anchor_;
  std::vector<std::vector<NodeId>> levels_;
};

LevelDecomposition bfs_levels(const Graph& g, NodeId anchor);

}  // namespace sociogrow
