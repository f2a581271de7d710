#include "mapfcc/local.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mapfcc/expanded.hpp"
#include "mapfcc/graph.hpp"
#include "solver_detail.hpp"

namespace mapfcc {

BallExtract extract_ball(const Graph& g, int center, int radius) {
  if (!g.has_vertex(center)) throw std::invalid_argument("extract_ball: bad center");
  if (radius < 0) throw std::invalid_argument("extract_ball: negative radius");
  std::vector<int> dist = bfs_distances(g, center, radius);
  BallExtract out;
  std::vector<int> dense(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] >= 0) {
      dense[v] = static_cast<int>(out.to_original.size());
      out.to_original.push_back(v);
    }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges())
    if (dense[u] >= 0 && dense[v] >= 0) edges.push_back({dense[u], dense[v]});
  out.graph = Graph::from_edges(static_cast<int>(out.to_original.size()), edges);
  return out;
}

SolveResult solve_local(const Instance& inst, const SolveOptions& opts, LocalInner inner) {
  SolveResult result;
  if (opts.estimate_connected_sets)
    result.stats.connected_set_estimate = detail::estimate_connected_sets(inst);
  if (detail::decide_degenerate(inst, result)) return result;

  const int k = inst.agent_count();
  const int radius = k * inst.range() + inst.makespan_budget();
  const int center = inst.agent(0).start;
  BallExtract ball = extract_ball(inst.graph(), center, radius);

  // Inside the ball: a d-connected start set spans at most (k-1)*d from the
  // center, each turn adds one, and communication checks detour at most d
  // further. Outside it, a start would break start connectivity (already
  // decided above) and a target would be unreachable within the budget.
  std::vector<int> dense(inst.graph().vertex_count(), -1);
  for (size_t i = 0; i < ball.to_original.size(); ++i) dense[ball.to_original[i]] = i;
  std::vector<Agent> mapped;
  for (int a = 0; a < k; ++a) {
    const Agent& agent = inst.agent(a);
    if (dense[agent.start] < 0) {
      result.outcome = SolveOutcome::kInfeasible;
      result.diagnostic = "agent " + std::to_string(a) +
                          " starts outside the reachable region around agent 0";
      return result;
    }
    if (dense[agent.target] < 0) {
      result.outcome = SolveOutcome::kInfeasible;
      result.diagnostic = "agent " + std::to_string(a) +
                          " cannot reach its target: it lies outside the reachable region";
      return result;
    }
    mapped.push_back({dense[agent.start], dense[agent.target]});
  }

  Instance local(ball.graph, mapped, inst.range(), inst.makespan_budget());
  SolveOptions inner_opts = opts;
  inner_opts.estimate_connected_sets = false;
  SolveResult inner_result;
  if (inner == LocalInner::kBfs) {
    inner_result = solve_bfs(local, inner_opts);
  } else {
    DisjointPathsResult dp = solve_disjoint_paths(local, inner_opts);
    inner_result.outcome = dp.outcome;
    inner_result.schedule = std::move(dp.schedule);
    inner_result.stats = dp.stats;
    inner_result.diagnostic = std::move(dp.diagnostic);
  }

  result.outcome = inner_result.outcome;
  result.diagnostic = std::move(inner_result.diagnostic);
  result.stats.expanded_nodes = inner_result.stats.expanded_nodes;
  result.stats.generated_nodes = inner_result.stats.generated_nodes;
  result.stats.max_frontier = inner_result.stats.max_frontier;
  if (inner_result.schedule) {
    Schedule mapped_back = *inner_result.schedule;
    for (auto& config : mapped_back.steps)
      for (int& v : config) v = ball.to_original[v];
    ValidationReport report = validate_schedule(inst, mapped_back);
    if (!report.ok() || !report.within_budget)
      throw std::logic_error("solve_local: mapped-back schedule fails validation");
    result.schedule = std::move(mapped_back);
  }
  return result;
}

}  // namespace mapfcc
