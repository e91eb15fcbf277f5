#include "sociogrow/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace sociogrow {

void Graph::require_node(NodeId i) const {
  if (!has_node(i)) {
    throw std::out_of_range("graph: unknown node id " + std::to_string(i));
  }
}

bool Graph::add_edge(NodeId i, NodeId j) {
  require_node(i);
  require_node(j);
  if (i == j) {
    throw std::invalid_argument("graph: self-loop on node " +
                                std::to_string(i));
  }
  if (has_edge(i, j)) return false;
  adj_[i].push_back(j);
  adj_[j].push_back(i);
  ++edge_count_;
  return true;
}

bool Graph::has_edge(NodeId i, NodeId j) const {
  require_node(i);
  require_node(j);
  // Scan the shorter list.
  const auto& a = adj_[i].size() <= adj_[j].size() ? adj_[i] : adj_[j];
  const NodeId target = adj_[i].size() <= adj_[j].size() ? j : i;
  return std::find(a.begin(), a.end(), target) != a.end();
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
  require_node(i);
  return adj_[i];
}

int Graph::degree(NodeId i) const {
  require_node(i);
  return static_cast<int>(adj_[i].size());
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId i = 0; i < node_count(); ++i) {
    for (NodeId j : adj_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph complete_graph(int n) {
  if (n < 1) {
    throw std::invalid_argument("complete_graph: n must be >= 1");
  }
  Graph g(n);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      g.add_edge(i, j);
    }
  }
  return g;
}

std::span<const NodeId> LevelDecomposition::level(int x) const {
  if (x < 1 || x > level_count()) {
    throw std::out_of_range("level index " + std::to_string(x) +
                            " out of range 1.." +
                            std::to_string(level_count()));
  }
  return levels_[x - 1];
}

LevelDecomposition bfs_levels(const Graph& g, NodeId anchor) {
  if (!g.has_node(anchor)) {
    throw std::out_of_range("bfs_levels: unknown anchor id " +
                            std::to_string(anchor));
  }
  std::vector<int> dist(g.node_count(), -1);
  dist[anchor] = 0;
  std::deque<NodeId> queue{anchor};
  int max_dist = 0;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        max_dist = std::max(max_dist, dist[v]);
        queue.push_back(v);
      }
    }
  }
  std::vector<std::vector<NodeId>> levels(max_dist);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (dist[v] > 0) levels[dist[v] - 1].push_back(v);
  }
  // BFS visits ids in queue order; levels are reported sorted.
  for (auto& level : levels) std::sort(level.begin(), level.end());
  return LevelDecomposition(anchor, std::move(levels));
}

}  // namespace sociogrow
