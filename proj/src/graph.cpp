#include "mapfcc/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace mapfcc {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  adj_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("graph: duplicate edge at vertex " + std::to_string(v));
  }
  g.edge_count_ = static_cast<int>(edges.size());
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  const int n = vertex_count();
  if (n == 0) return true;
  std::vector<int> dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int x) { return x < 0; });
}

Graph grid_graph(int width, int height) {
  if (width < 1 || height < 1) throw std::invalid_argument("grid: dimensions must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < height; ++r)
    for (int c = 0; c < width; ++c) {
      int v = r * width + c;
      if (c + 1 < width) edges.emplace_back(v, v + 1);
      if (r + 1 < height) edges.emplace_back(v, v + width);
    }
  return Graph::from_edges(width * height, edges);
}

std::vector<int> bfs_distances(const Graph& g, int src, int depth_cap) {
  if (!g.has_vertex(src)) throw std::invalid_argument("bfs: source out of range");
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (depth_cap >= 0 && dist[u] >= depth_cap) continue;
    for (int w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

Graph power_graph(const Graph& g, int d) {
  if (d < 1) throw std::invalid_argument("power_graph: d must be >= 1");
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    std::vector<int> dist = bfs_distances(g, u, d);
    for (int v = u + 1; v < n; ++v)
      if (dist[v] >= 1) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

namespace {

// Plain union-find, path halving.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_d_connected(const Graph& g, int d, const std::vector<int>& occupied) {
  if (d < 1) throw std::invalid_argument("is_d_connected: d must be >= 1");
  if (occupied.empty()) throw std::invalid_argument("is_d_connected: empty vertex set");
  std::vector<char> member(g.vertex_count(), 0);
  for (int v : occupied) {
    if (!g.has_vertex(v)) throw std::invalid_argument("is_d_connected: vertex out of range");
    if (member[v]) throw std::invalid_argument("is_d_connected: duplicate vertex in set");
    member[v] = 1;
  }
  const int m = static_cast<int>(occupied.size());
  UnionFind uf(m);
  // Truncated BFS from each member; union members found within distance d.
  for (int a = 0; a < m; ++a) {
    std::vector<int> dist = bfs_distances(g, occupied[a], d);
    for (int b = a + 1; b < m; ++b)
      if (dist[occupied[b]] >= 1) uf.unite(a, b);
  }
  int root = uf.find(0);
  for (int a = 1; a < m; ++a)
    if (uf.find(a) != root) return false;
  return true;
}

}  // namespace mapfcc
