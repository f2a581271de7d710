#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mapfcc {

// Simple undirected graph on dense 0-based vertex ids. No self-loops, no
// parallel edges; adjacency lists are kept sorted so neighbor enumeration is
// deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Builds a graph from an edge list. Throws std::invalid_argument on
  // out-of-range endpoints, self-loops, or duplicate edges.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  bool has_vertex(int v) const { return v >= 0 && v < vertex_count(); }
  bool has_edge(int u, int v) const;

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool is_connected() const;
  bool is_tree() const { return is_connected() && edge_count_ == vertex_count() - 1; }

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

// W x H grid graph, vertices in row-major order: (row r, col c) -> r*W + c.
Graph grid_graph(int width, int height);

// BFS distances from src, truncated at depth_cap (pass -1 for unbounded).
// Unreached vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src, int depth_cap = -1);

// D = d-th power of g: edge uv iff 1 <= dist_g(u, v) <= d. d >= 1 required.
Graph power_graph(const Graph& g, int d);

// True iff the induced subgraph D[W] is connected, where D = power_graph(g,d).
// Distances are measured in g (the whole graph), not in any induced subgraph.
// Throws std::invalid_argument on empty W, duplicate members, or d < 1.
bool is_d_connected(const Graph& g, int d, const std::vector<int>& occupied);

}  // namespace mapfcc
