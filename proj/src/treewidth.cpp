#include "mapfcc/treewidth.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace mapfcc {

int TreeDecomposition::width() const {
  int largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, static_cast<int>(bag.size()));
  return largest - 1;
}

namespace {

bool sorted_contains(const std::vector<int>& bag, int v) {
  return std::binary_search(bag.begin(), bag.end(), v);
}

bool tree_shape_ok(const TreeDecomposition& td) {
  const int t = td.node_count();
  if (t == 0 || static_cast<int>(td.parent.size()) != t) return false;
  int roots = 0;
  for (int i = 0; i < t; ++i) {
    if (td.parent[i] == -1) {
      ++roots;
      continue;
    }
    if (td.parent[i] < 0 || td.parent[i] >= t || td.parent[i] == i) return false;
  }
  if (roots != 1) return false;
  // Every node must reach the root; a cycle would exceed t steps.
  for (int i = 0; i < t; ++i) {
    int at = i, steps = 0;
    while (td.parent[at] != -1) {
      at = td.parent[at];
      if (++steps > t) return false;
    }
  }
  return true;
}

}  // namespace

bool is_valid_decomposition(const TreeDecomposition& td, const Graph& g) {
  if (!tree_shape_ok(td)) return false;
  const int n = g.vertex_count();
  for (const auto& bag : td.bags) {
    if (!std::is_sorted(bag.begin(), bag.end())) return false;
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) return false;
    for (int v : bag)
      if (v < 0 || v >= n) return false;
  }
  // Vertex and edge coverage.
  std::vector<char> covered(n, 0);
  for (const auto& bag : td.bags)
    for (int v : bag) covered[v] = 1;
  for (int v = 0; v < n; ++v)
    if (!covered[v]) return false;
  for (const auto& [u, v] : g.edges()) {
    bool ok = false;
    for (const auto& bag : td.bags)
      if (sorted_contains(bag, u) && sorted_contains(bag, v)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  // Occurrence connectivity: the nodes holding v must form one subtree, i.e.
  // exactly one of them has its parent outside the set.
  for (int v = 0; v < n; ++v) {
    int tops = 0;
    for (int i = 0; i < td.node_count(); ++i) {
      if (!sorted_contains(td.bags[i], v)) continue;
      int p = td.parent[i];
      if (p == -1 || !sorted_contains(td.bags[p], v)) ++tops;
    }
    if (tops != 1) return false;
  }
  return true;
}

TreeDecomposition treewidth_upper_bound(const Graph& g) {
  const int n = g.vertex_count();
  TreeDecomposition td;
  if (n == 0) {
    td.bags = {{}};
    td.parent = {-1};
    return td;
  }

  std::vector<std::set<int>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }

  std::vector<char> eliminated(n, 0);
  std::vector<int> position(n, -1);  // elimination time of each vertex
  td.bags.resize(n);
  for (int step = 0; step < n; ++step) {
    // Vertex whose neighborhood needs the fewest fill edges; ties toward the
    // lowest id.
    int best = -1;
    long best_fill = -1;
    for (int v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      long fill = 0;
      for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
        for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
          if (!adj[*it].count(*jt)) ++fill;
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    position[best] = step;
    auto& bag = td.bags[step];
    bag.push_back(best);
    bag.insert(bag.end(), adj[best].begin(), adj[best].end());
    std::sort(bag.begin(), bag.end());
    for (int u : adj[best])
      for (int w : adj[best])
        if (u < w) {
          adj[u].insert(w);
          adj[w].insert(u);
        }
    for (int u : adj[best]) adj[u].erase(best);
    adj[best].clear();
    eliminated[best] = 1;
  }

  // Attach each node to the earliest-eliminated later member of its bag;
  // nodes with singleton bags (end of a component) chain to the next node.
  td.parent.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int next = -1;
    for (int v : td.bags[i]) {
      if (position[v] <= i) continue;
      if (next < 0 || position[v] < next) next = position[v];
    }
    if (next < 0 && i + 1 < n) next = i + 1;
    td.parent[i] = next;
  }
  return td;
}

Graph te_underlying_graph(const TimeExpandedGraph& te) {
  std::vector<std::pair<int, int>> pairs;
  for (const TeEdge& e : te.edges())
    if (e.u != e.v) pairs.push_back({e.u, e.v});
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return Graph::from_edges(te.vertex_count(), pairs);
}

TreeDecomposition lift_tree_decomposition(const TreeDecomposition& td,
                                          const TimeExpandedGraph& te,
                                          const PathsWitness& witness) {
  const Instance& inst = te.instance();
  if (!is_valid_decomposition(td, inst.graph()))
    throw std::invalid_argument(
        "lift_tree_decomposition: not a valid decomposition of the base graph");
  paths_to_schedule(te, witness);  // full witness verification

  const int n = inst.graph().vertex_count();
  const int ell = te.ell();
  const int k = inst.agent_count();

  // Base projection of each agent's path.
  std::vector<std::vector<char>> on_path(k, std::vector<char>(n, 0));
  for (int a = 0; a < k; ++a)
    for (int v : witness.layers[a]) on_path[a][v] = 1;

  TreeDecomposition lifted;
  lifted.parent = td.parent;
  lifted.bags.resize(td.node_count());
  for (int i = 0; i < td.node_count(); ++i) {
    auto& bag = lifted.bags[i];
    for (int v : td.bags[i])
      for (int layer = 0; layer <= ell; ++layer) bag.push_back(te.id_of(v, layer));
    for (int a = 0; a < k; ++a) {
      bool meets = std::any_of(td.bags[i].begin(), td.bags[i].end(),
                               [&](int v) { return on_path[a][v]; });
      if (meets) {
        bag.push_back(te.id_of(inst.agent(a).start, 0));
        bag.push_back(te.id_of(inst.agent(a).target, ell));
      }
    }
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  }

  if (!is_valid_decomposition(lifted, te_underlying_graph(te)))
    throw std::logic_error("lift_tree_decomposition: lifted decomposition is invalid");
  const int bound = 3 * (ell + 1) * (td.width() + 1) - 1;
  if (lifted.width() > bound)
    throw std::logic_error("lift_tree_decomposition: width exceeds the guaranteed bound");
  return lifted;
}

}  // namespace mapfcc
