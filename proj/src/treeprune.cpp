#include "mapfcc/treeprune.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "mapfcc/validate.hpp"

namespace mapfcc {

namespace {

void check_tree_and_agents(const Graph& tree, const std::vector<Agent>& agents) {
  if (!tree.is_tree()) throw std::invalid_argument("treeprune: graph is not a tree");
  if (agents.empty()) throw std::invalid_argument("treeprune: no agents");
  for (const Agent& a : agents)
    if (!tree.has_vertex(a.start) || !tree.has_vertex(a.target))
      throw std::invalid_argument("treeprune: agent endpoint out of range");
}

// Works in the original id space with an alive mask; materializes a dense
// renumbered tree at the end.
struct Pruner {
  const Graph& tree;
  const std::vector<Agent>& agents;
  std::vector<char> alive;
  PruneTrace trace;

  Pruner(const Graph& t, const std::vector<Agent>& a)
      : tree(t), agents(a), alive(t.vertex_count(), 1) {}

  int alive_degree(int v) const {
    int deg = 0;
    for (int w : tree.neighbors(v)) deg += alive[w];
    return deg;
  }

  // Unique-tree-path neighbors of u that some agent path passes through,
  // restricted to the currently alive subtree.
  std::vector<int> relevant(int u) const {
    // Parent pointers of the alive subtree rooted at u.
    std::vector<int> parent(tree.vertex_count(), -2);
    std::deque<int> queue{u};
    parent[u] = -1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int w : tree.neighbors(x))
        if (alive[w] && parent[w] == -2) {
          parent[w] = x;
          queue.push_back(w);
        }
    }
    std::vector<char> on_path(tree.vertex_count(), 0);
    for (const Agent& a : agents)
      for (int endpoint : {a.start, a.target}) {
        if (endpoint == u) continue;  // empty path
        for (int x = endpoint; x != -1; x = parent[x]) on_path[x] = 1;
      }
    std::vector<int> out;
    for (int w : tree.neighbors(u))
      if (alive[w] && on_path[w]) out.push_back(w);
    return out;
  }

  // One reduction at hub u; requires alive_degree(u) > 3k.
  void prune_at(int u) {
    const int k = static_cast<int>(agents.size());
    std::vector<int> vu = relevant(u);
    std::vector<char> blocked(tree.vertex_count(), 0);
    for (int w : vu) blocked[w] = 1;

    // Component of u in the alive tree minus the relevant neighbors.
    std::vector<char> in_comp(tree.vertex_count(), 0);
    std::deque<int> queue{u};
    in_comp[u] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int w : tree.neighbors(x))
        if (alive[w] && !blocked[w] && !in_comp[w]) {
          in_comp[w] = 1;
          queue.push_back(w);
        }
    }

    // Keep u plus its k lowest-id neighbors inside the component (all of them
    // if fewer than k); delete the rest of the component.
    std::vector<int> keepable;
    for (int w : tree.neighbors(u))
      if (alive[w] && in_comp[w]) keepable.push_back(w);
    std::sort(keepable.begin(), keepable.end());
    if (static_cast<int>(keepable.size()) > k) keepable.resize(k);

    std::vector<char> kept(tree.vertex_count(), 0);
    kept[u] = 1;
    for (int w : keepable) kept[w] = 1;

    PruneStep step;
    step.hub = u;
    step.kept_neighbors = keepable;
    for (int v = 0; v < tree.vertex_count(); ++v)
      if (in_comp[v] && !kept[v]) {
        for (const Agent& a : agents)
          if (a.start == v || a.target == v)
            throw std::logic_error("treeprune: attempted to remove an agent endpoint");
        alive[v] = 0;
        step.removed.push_back(v);
      }
    trace.steps.push_back(std::move(step));
  }

  PruneResult materialize() const {
    std::vector<int> to_new(tree.vertex_count(), -1);
    PruneResult out;
    out.trace = trace;
    for (int v = 0; v < tree.vertex_count(); ++v)
      if (alive[v]) {
        to_new[v] = static_cast<int>(out.trace.kept_to_original.size());
        out.trace.kept_to_original.push_back(v);
      }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : tree.edges())
      if (alive[u] && alive[v]) edges.emplace_back(to_new[u], to_new[v]);
    out.tree = Graph::from_edges(static_cast<int>(out.trace.kept_to_original.size()), edges);
    out.agents.reserve(agents.size());
    for (const Agent& a : agents) out.agents.push_back({to_new[a.start], to_new[a.target]});
    return out;
  }
};

}  // namespace

std::vector<int> relevant_neighbors(const Graph& tree, const std::vector<Agent>& agents, int u) {
  check_tree_and_agents(tree, agents);
  if (!tree.has_vertex(u)) throw std::invalid_argument("treeprune: hub out of range");
  return Pruner(tree, agents).relevant(u);
}

PruneResult prune_once(const Graph& tree, const std::vector<Agent>& agents, int u) {
  check_tree_and_agents(tree, agents);
  if (!tree.has_vertex(u)) throw std::invalid_argument("treeprune: hub out of range");
  const int k = static_cast<int>(agents.size());
  if (tree.degree(u) <= 3 * k)
    throw std::invalid_argument("treeprune: hub degree " + std::to_string(tree.degree(u)) +
                                " does not exceed 3k = " + std::to_string(3 * k));
  Pruner pruner(tree, agents);
  pruner.prune_at(u);
  return pruner.materialize();
}

PruneResult prune(const Graph& tree, const std::vector<Agent>& agents) {
  check_tree_and_agents(tree, agents);
  const int k = static_cast<int>(agents.size());
  Pruner pruner(tree, agents);
  for (;;) {
    int hub = -1;
    for (int v = 0; v < tree.vertex_count() && hub < 0; ++v)
      if (pruner.alive[v] && pruner.alive_degree(v) > 3 * k) hub = v;
    if (hub < 0) break;
    pruner.prune_at(hub);
  }
  PruneResult out = pruner.materialize();
  if (!out.tree.is_tree()) throw std::logic_error("treeprune: result is not a tree");
  if (out.tree.max_degree() > 3 * k)
    throw std::logic_error("treeprune: max degree still exceeds 3k after pruning");
  return out;
}

SolveResult solve_tree(const Instance& inst, const SolveOptions& opts) {
  if (!inst.graph().is_tree())
    throw std::invalid_argument("solve_tree: instance graph is not a tree; use solve_bfs");
  PruneResult pruned = prune(inst.graph(), inst.agents());
  Instance small(pruned.tree, pruned.agents, inst.range(), inst.makespan_budget());
  SolveResult result = solve_bfs(small, opts);
  if (result.feasible()) {
    Schedule mapped = *result.schedule;
    for (Config& step : mapped.steps)
      for (int& v : step) v = pruned.trace.kept_to_original[v];
    ValidationReport report = validate_schedule(inst, mapped);
    if (!report.ok() || !report.within_budget)
      throw std::logic_error("solve_tree: mapped schedule fails validation on the original tree");
    result.schedule = std::move(mapped);
  }
  return result;
}

}  // namespace mapfcc
