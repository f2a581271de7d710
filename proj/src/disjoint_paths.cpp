#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "mapfcc/expanded.hpp"
#include "mapfcc/graph.hpp"
#include "solver_detail.hpp"

namespace mapfcc {

namespace {

// Extends the k path heads one layer at a time. A state is (remaining layers,
// head configuration); failed states are memoized under that key, which stays
// valid across the iterative-deepening rounds.
struct WitnessSearch {
  const Instance& inst;
  const SolveOptions& opts;
  std::vector<std::vector<int>> to_target;
  std::vector<std::unordered_set<std::string>> failed_by_remaining;
  std::vector<Config> heads;  // heads[i] = configuration at layer i
  SearchStats stats;
  bool budget_hit = false;

  WitnessSearch(const Instance& instance, const SolveOptions& options)
      : inst(instance), opts(options) {
    const int k = inst.agent_count();
    to_target.resize(k);
    for (int a = 0; a < k; ++a)
      to_target[a] = bfs_distances(inst.graph(), inst.agent(a).target);
    failed_by_remaining.resize(inst.makespan_budget() + 1);
  }

  // Can the heads at layer `depth` be extended to reach the targets at layer
  // `depth + remaining` exactly? Leaves padding to the caller: reaching the
  // targets early still succeeds because staying there is always legal.
  bool extend(int depth, int remaining) {
    // By value: the successor callback appends to `heads`, and a reallocation
    // would dangle a reference into it for the rest of the enumeration.
    const Config at = heads[depth];
    if (remaining == 0) return at == inst.targets();
    if (budget_hit) return false;
    if (opts.node_budget > 0 && stats.expanded_nodes >= opts.node_budget) {
      budget_hit = true;
      return false;
    }
    ++stats.expanded_nodes;
    stats.max_frontier = std::max(stats.max_frontier, static_cast<std::int64_t>(depth + 1));
    auto& failed = failed_by_remaining[remaining];
    std::string key = config_key(at);
    if (failed.count(key)) return false;

    bool found = false;
    detail::for_each_successor(
        inst, at,
        [&](int a, int v) {
          if (found) return false;
          int t = to_target[a][v];
          return t >= 0 && t <= remaining - 1;
        },
        [&](const Config& next) {
          if (found) return;
          ++stats.generated_nodes;
          heads.push_back(next);
          if (extend(depth + 1, remaining - 1)) {
            found = true;
            return;
          }
          heads.pop_back();
        });
    if (found) return true;
    if (!budget_hit) failed.insert(std::move(key));
    return false;
  }
};

PathsWitness pad_to_witness(const Instance& inst, const Schedule& sched) {
  const int ell = inst.makespan_budget();
  const int mu = sched.makespan();
  PathsWitness w;
  w.layers.assign(inst.agent_count(), std::vector<int>(ell + 1));
  for (int a = 0; a < inst.agent_count(); ++a)
    for (int i = 0; i <= ell; ++i) w.layers[a][i] = sched.steps[std::min(i, mu)][a];
  return w;
}

}  // namespace

DisjointPathsResult solve_disjoint_paths(const Instance& inst, const SolveOptions& opts) {
  DisjointPathsResult result;
  if (opts.estimate_connected_sets)
    result.stats.connected_set_estimate = detail::estimate_connected_sets(inst);

  SolveResult degenerate;
  if (detail::decide_degenerate(inst, degenerate)) {
    result.outcome = degenerate.outcome;
    result.diagnostic = degenerate.diagnostic;
    if (degenerate.schedule) {
      result.schedule = std::move(degenerate.schedule);
      // A zero-budget schedule has a single-layer witness only when the one
      // occupied arrangement can communicate.
      std::vector<int> occupied = inst.starts();
      std::sort(occupied.begin(), occupied.end());
      if (is_d_connected(inst.graph(), inst.range(), occupied))
        result.witness = pad_to_witness(inst, *result.schedule);
      else
        result.diagnostic =
            "feasible with the empty schedule, but no path-system witness exists: the "
            "occupied arrangement is not " +
            std::to_string(inst.range()) + "-connected";
    }
    return result;
  }

  const int ell = inst.makespan_budget();
  WitnessSearch search(inst, opts);
  // Every later return copies search.stats wholesale; carry the estimate over.
  search.stats.connected_set_estimate = result.stats.connected_set_estimate;
  const Config start = inst.starts();
  for (int a = 0; a < inst.agent_count(); ++a)
    if (search.to_target[a][start[a]] < 0 || search.to_target[a][start[a]] > ell) {
      result.outcome = SolveOutcome::kInfeasible;
      result.diagnostic = "agent " + std::to_string(a) + " cannot reach its target in " +
                          std::to_string(ell) + " turns";
      result.stats = search.stats;
      return result;
    }

  for (int target_layers = 0; target_layers <= ell; ++target_layers) {
    search.heads.assign(1, start);
    if (search.extend(0, target_layers)) {
      result.outcome = SolveOutcome::kFeasible;
      result.schedule = Schedule{search.heads};
      result.witness = pad_to_witness(inst, *result.schedule);
      result.stats = search.stats;
      return result;
    }
    if (search.budget_hit) {
      result.outcome = SolveOutcome::kBudgetExceeded;
      result.diagnostic = "node budget of " + std::to_string(opts.node_budget) +
                          " expansions exhausted";
      result.stats = search.stats;
      return result;
    }
  }

  result.outcome = SolveOutcome::kInfeasible;
  result.diagnostic = "no disjoint path system within the layer budget";
  result.stats = search.stats;
  return result;
}

}  // namespace mapfcc
