#include "mapfcc/search.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "mapfcc/graph.hpp"
#include "solver_detail.hpp"

namespace mapfcc {

std::string config_key(const Config& c) {
  std::string key(c.size() * 4, '\0');
  for (size_t a = 0; a < c.size(); ++a) {
    std::uint32_t v = static_cast<std::uint32_t>(c[a]);
    std::memcpy(key.data() + a * 4, &v, 4);
  }
  return key;
}

namespace {

void check_config(const Instance& inst, const Config& c) {
  const int k = inst.agent_count();
  if (static_cast<int>(c.size()) != k)
    throw std::invalid_argument("successors: configuration size does not match agent count");
  std::vector<char> used(inst.graph().vertex_count(), 0);
  for (int v : c) {
    if (!inst.graph().has_vertex(v))
      throw std::invalid_argument("successors: vertex out of range");
    if (used[v]) throw std::invalid_argument("successors: configuration not injective");
    used[v] = 1;
  }
}

// Sorted closed neighborhood {v} union N(v).
std::vector<int> closed_neighborhood(const Graph& g, int v) {
  const auto& nb = g.neighbors(v);
  std::vector<int> out;
  out.reserve(nb.size() + 1);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  out.insert(out.end(), nb.begin(), it);
  out.push_back(v);
  out.insert(out.end(), it, nb.end());
  return out;
}

}  // namespace

// Enumerates legal joint moves from `from` in lexicographic order: agents are
// placed in index order, each within its closed neighborhood, with collision
// and swap checks applied per agent and d-connectivity once per complete
// move. `admit(a, v)` can veto candidate vertices (must be move-independent).
void detail::for_each_successor(const Instance& inst, const Config& from,
                                const std::function<bool(int, int)>& admit,
                                const std::function<void(const Config&)>& emit) {
  const Graph& g = inst.graph();
  const int k = inst.agent_count();
  Config next(k, -1);
  std::vector<char> used(g.vertex_count(), 0);

  std::function<void(int)> place = [&](int a) {
    if (a == k) {
      std::vector<int> occupied(next.begin(), next.end());
      std::sort(occupied.begin(), occupied.end());
      if (is_d_connected(g, inst.range(), occupied)) emit(next);
      return;
    }
    for (int v : closed_neighborhood(g, from[a])) {
      if (used[v]) continue;
      if (admit && !admit(a, v)) continue;
      bool swap = false;
      for (int b = 0; b < a && !swap; ++b)
        swap = v == from[b] && next[b] == from[a] && g.has_edge(from[a], from[b]);
      if (swap) continue;
      used[v] = 1;
      next[a] = v;
      place(a + 1);
      used[v] = 0;
    }
  };
  place(0);
}

std::vector<Config> successors(const Instance& inst, const Config& c) {
  check_config(inst, c);
  std::vector<Config> out;
  detail::for_each_successor(inst, c, nullptr,
                             [&out](const Config& next) { out.push_back(next); });
  return out;
}

// Degenerate decisions shared by all solvers; returns true when `result` was
// decided without search.
bool detail::decide_degenerate(const Instance& inst, SolveResult& result) {
  if (inst.makespan_budget() == 0) {
    if (inst.starts_equal_targets()) {
      result.outcome = SolveOutcome::kFeasible;
      result.schedule = Schedule{{inst.starts()}};
    } else {
      result.outcome = SolveOutcome::kInfeasible;
      result.diagnostic = "zero budget and starts differ from targets";
    }
    return true;
  }
  std::vector<int> occupied = inst.starts();
  std::sort(occupied.begin(), occupied.end());
  if (!is_d_connected(inst.graph(), inst.range(), occupied)) {
    result.outcome = SolveOutcome::kInfeasible;
    result.diagnostic = "start arrangement is not " + std::to_string(inst.range()) +
                        "-connected; no move can leave it";
    return true;
  }
  return false;
}

std::int64_t detail::estimate_connected_sets(const Instance& inst) {
  const Graph d_power = power_graph(inst.graph(), inst.range());
  const int k = inst.agent_count();
  std::uint64_t total = 0;
  for (int v = 0; v < d_power.vertex_count(); ++v)
    total += count_connected_sets(d_power, v, k);
  return static_cast<std::int64_t>(total / k);
}

SolveResult solve_bfs(const Instance& inst, const SolveOptions& opts) {
  SolveResult result;
  if (opts.estimate_connected_sets)
    result.stats.connected_set_estimate = detail::estimate_connected_sets(inst);
  if (detail::decide_degenerate(inst, result)) return result;

  const Graph& g = inst.graph();
  const int k = inst.agent_count();
  const int ell = inst.makespan_budget();

  // Per-agent distances to target; admissible lower bound on remaining turns.
  std::vector<std::vector<int>> to_target(k);
  for (int a = 0; a < k; ++a) to_target[a] = bfs_distances(g, inst.agent(a).target);
  const Config start = inst.starts();
  for (int a = 0; a < k; ++a)
    if (to_target[a][start[a]] < 0 || to_target[a][start[a]] > ell) {
      result.outcome = SolveOutcome::kInfeasible;
      result.diagnostic = "agent " + std::to_string(a) + " cannot reach its target in " +
                          std::to_string(ell) + " turns";
      return result;
    }

  struct Node {
    Config config;
    int parent;
    int depth;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> visited;
  std::deque<int> queue;

  const Config targets = inst.targets();
  auto reconstruct = [&](int idx) {
    std::vector<Config> steps;
    for (int at = idx; at >= 0; at = nodes[at].parent) steps.push_back(nodes[at].config);
    std::reverse(steps.begin(), steps.end());
    result.outcome = SolveOutcome::kFeasible;
    result.schedule = Schedule{std::move(steps)};
  };

  nodes.push_back({start, -1, 0});
  visited.insert(config_key(start));
  queue.push_back(0);
  result.stats.generated_nodes = 1;
  result.stats.max_frontier = 1;
  if (start == targets) {
    reconstruct(0);
    return result;
  }

  while (!queue.empty()) {
    if (opts.node_budget > 0 && result.stats.expanded_nodes >= opts.node_budget) {
      result.outcome = SolveOutcome::kBudgetExceeded;
      result.diagnostic = "node budget of " + std::to_string(opts.node_budget) +
                          " expansions exhausted";
      return result;
    }
    const int idx = queue.front();
    queue.pop_front();
    const int depth = nodes[idx].depth;
    if (depth >= ell) continue;
    const Config from = nodes[idx].config;  // copy: nodes may reallocate
    const int remaining = ell - (depth + 1);
    bool found = false;
    detail::for_each_successor(
        inst, from,
        [&](int a, int v) {
          int t = to_target[a][v];
          return t >= 0 && t <= remaining;
        },
        [&](const Config& next) {
          if (found) return;
          ++result.stats.generated_nodes;
          std::string key = config_key(next);
          if (!visited.insert(std::move(key)).second) return;
          nodes.push_back({next, idx, depth + 1});
          if (next == targets) {
            found = true;
            return;
          }
          queue.push_back(static_cast<int>(nodes.size()) - 1);
          result.stats.max_frontier =
              std::max(result.stats.max_frontier, static_cast<std::int64_t>(queue.size()));
        });
    ++result.stats.expanded_nodes;
    if (found) {
      reconstruct(static_cast<int>(nodes.size()) - 1);
      return result;
    }
  }

  result.outcome = SolveOutcome::kInfeasible;
  result.diagnostic = "searched all arrangements reachable within the budget";
  return result;
}

namespace {

// Self-contained helpers for the ground-truth solver. Deliberately built on
// plain pairwise distances rather than the incremental machinery above.
struct OracleContext {
  const Instance& inst;
  std::vector<std::vector<int>> dist;  // all-pairs graph distances
  std::int64_t budget = 0;
  std::int64_t visited = 0;
  std::int64_t generated = 0;
  int max_depth = 0;
  bool budget_hit = false;

  explicit OracleContext(const Instance& instance) : inst(instance) {
    const Graph& g = inst.graph();
    dist.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) dist.push_back(bfs_distances(g, v));
  }

  bool connected(const Config& c) const {
    const int k = static_cast<int>(c.size());
    std::vector<char> reached(k, 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < k; ++b)
        if (!reached[b] && dist[c[a]][c[b]] >= 0 && dist[c[a]][c[b]] <= inst.range()) {
          reached[b] = 1;
          ++count;
          stack.push_back(b);
        }
    }
    return count == k;
  }

  // Depth-limited DFS: exactly `remaining` further moves must end on targets.
  bool dfs(Config& current, std::vector<Config>& path, int remaining) {
    ++visited;
    max_depth = std::max(max_depth, static_cast<int>(path.size()));
    if (budget > 0 && visited > budget) {
      budget_hit = true;
      return false;
    }
    const int k = inst.agent_count();
    if (remaining == 0) {
      for (int a = 0; a < k; ++a)
        if (current[a] != inst.agent(a).target) return false;
      return true;
    }
    for (int a = 0; a < k; ++a)
      if (dist[current[a]][inst.agent(a).target] > remaining ||
          dist[current[a]][inst.agent(a).target] < 0)
        return false;

    const Graph& g = inst.graph();
    Config next(k, -1);
    std::function<bool(int)> choose = [&](int a) -> bool {
      if (a == k) {
        if (!connected(next)) return false;
        ++generated;
        path.push_back(next);
        Config saved = current;
        current = next;
        bool done = dfs(current, path, remaining - 1);
        current = saved;
        if (!done) path.pop_back();
        return done;
      }
      std::vector<int> options = g.neighbors(current[a]);
      options.push_back(current[a]);
      std::sort(options.begin(), options.end());
      for (int v : options) {
        bool clash = false;
        for (int b = 0; b < a && !clash; ++b) clash = next[b] == v;
        for (int b = 0; b < a && !clash; ++b)
          clash = v == current[b] && next[b] == current[a] && g.has_edge(current[a], current[b]);
        if (clash) continue;
        next[a] = v;
        if (choose(a + 1)) return true;
        if (budget_hit) return false;
      }
      next[a] = -1;
      return false;
    };
    return choose(0);
  }
};

}  // namespace

SolveResult oracle_solve(const Instance& inst, const SolveOptions& opts) {
  SolveResult result;
  if (opts.estimate_connected_sets)
    result.stats.connected_set_estimate = detail::estimate_connected_sets(inst);
  OracleContext ctx(inst);
  // Same degenerate rules as solve_bfs, decided with the oracle's own
  // connectivity check.
  if (inst.makespan_budget() == 0) {
    if (inst.starts_equal_targets()) {
      result.outcome = SolveOutcome::kFeasible;
      result.schedule = Schedule{{inst.starts()}};
    } else {
      result.outcome = SolveOutcome::kInfeasible;
      result.diagnostic = "zero budget and starts differ from targets";
    }
    return result;
  }
  Config start = inst.starts();
  if (!ctx.connected(start)) {
    result.outcome = SolveOutcome::kInfeasible;
    result.diagnostic = "start arrangement is not d-connected";
    return result;
  }

  ctx.budget = opts.node_budget;
  for (int depth = 0; depth <= inst.makespan_budget(); ++depth) {
    std::vector<Config> path{start};
    Config current = start;
    bool found = ctx.dfs(current, path, depth);
    result.stats.expanded_nodes = ctx.visited;
    result.stats.generated_nodes = ctx.generated;
    result.stats.max_frontier = ctx.max_depth;
    if (ctx.budget_hit) {
      result.outcome = SolveOutcome::kBudgetExceeded;
      result.diagnostic = "node budget of " + std::to_string(opts.node_budget) +
                          " visits exhausted";
      return result;
    }
    if (found) {
      result.outcome = SolveOutcome::kFeasible;
      result.schedule = Schedule{std::move(path)};
      return result;
    }
  }
  result.outcome = SolveOutcome::kInfeasible;
  result.diagnostic = "exhausted all move sequences within the budget";
  return result;
}

std::uint64_t count_connected_sets(const Graph& g, int vertex, int size) {
  if (!g.has_vertex(vertex)) throw std::invalid_argument("count_connected_sets: bad vertex");
  if (size < 1) throw std::invalid_argument("count_connected_sets: size must be >= 1");
  if (size > g.vertex_count()) return 0;

  // Canonical neighbor-expansion enumeration: every connected set containing
  // `vertex` is produced exactly once (banned vertices stop re-discovery).
  std::uint64_t count = 0;
  std::vector<char> in_set(g.vertex_count(), 0), banned(g.vertex_count(), 0);
  in_set[vertex] = 1;

  std::function<void(std::vector<int>, int)> expand = [&](std::vector<int> frontier,
                                                          int members) {
    if (members == size) {
      ++count;
      return;
    }
    std::vector<int> newly_banned;
    while (!frontier.empty()) {
      auto smallest = std::min_element(frontier.begin(), frontier.end());
      int v = *smallest;
      frontier.erase(smallest);

      std::vector<int> extended = frontier;
      for (int w : g.neighbors(v))
        if (!in_set[w] && !banned[w] &&
            std::find(extended.begin(), extended.end(), w) == extended.end())
          extended.push_back(w);
      in_set[v] = 1;
      expand(std::move(extended), members + 1);
      in_set[v] = 0;
      banned[v] = 1;
      newly_banned.push_back(v);
    }
    for (int v : newly_banned) banned[v] = 0;
  };

  expand(g.neighbors(vertex), 1);
  return count;
}

}  // namespace mapfcc
