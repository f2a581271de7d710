#include "mapfcc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>

#include "mapfcc/expanded.hpp"
#include "mapfcc/graph.hpp"
#include "mapfcc/instance.hpp"
#include "mapfcc/io.hpp"
#include "mapfcc/local.hpp"
#include "mapfcc/mso.hpp"
#include "mapfcc/reductions.hpp"
#include "mapfcc/search.hpp"
#include "mapfcc/treeprune.hpp"
#include "mapfcc/validate.hpp"

struct mapfcc_instance {
  mapfcc::Instance value;
};
struct mapfcc_schedule {
  mapfcc::Schedule value;
};
struct mapfcc_validation {
  mapfcc::ValidationReport value;
};
struct mapfcc_mcc {
  mapfcc::MccInstance value;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_diagnostic;

template <typename F>
mapfcc_status guarded(F&& body) {
  try {
    body();
    return MAPFCC_OK;
  } catch (const mapfcc::ParseError& e) {
    g_last_error = e.what();
    return MAPFCC_ERROR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return MAPFCC_ERROR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MAPFCC_ERROR_UNKNOWN;
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

// Strategy choice for MAPFCC_STRATEGY_AUTO: the tree solver when the graph is
// a tree, otherwise the locality reduction when its ball is a proper subgraph,
// otherwise plain breadth-first search.
int resolve_auto(const mapfcc::Instance& inst) {
  if (inst.graph().is_tree()) return MAPFCC_STRATEGY_TREE;
  const long long radius = static_cast<long long>(inst.agent_count()) * inst.range() +
                           inst.makespan_budget();
  const int n = inst.graph().vertex_count();
  if (radius < n) {
    std::vector<int> dist =
        mapfcc::bfs_distances(inst.graph(), inst.agent(0).start, static_cast<int>(radius));
    int reached = 0;
    for (int v = 0; v < n; ++v)
      if (dist[v] >= 0) ++reached;
    if (reached < n) return MAPFCC_STRATEGY_LOCAL;
  }
  return MAPFCC_STRATEGY_BFS;
}

}  // namespace

extern "C" {

const char* mapfcc_version(void) { return "0.1.0"; }

const char* mapfcc_status_string(mapfcc_status status) {
  switch (status) {
    case MAPFCC_OK: return "ok";
    case MAPFCC_ERROR_PARSE: return "parse error";
    case MAPFCC_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case MAPFCC_ERROR_UNKNOWN: return "unknown error";
  }
  return "unknown error";
}

const char* mapfcc_strategy_name(int strategy) {
  switch (strategy) {
    case MAPFCC_STRATEGY_AUTO: return "auto";
    case MAPFCC_STRATEGY_BFS: return "bfs";
    case MAPFCC_STRATEGY_TREE: return "tree";
    case MAPFCC_STRATEGY_EXPANDED: return "expanded";
    case MAPFCC_STRATEGY_LOCAL: return "local";
    case MAPFCC_STRATEGY_ORACLE: return "oracle";
  }
  return "unknown";
}

const char* mapfcc_last_error(void) { return g_last_error.c_str(); }

void mapfcc_string_free(char* text) { std::free(text); }

mapfcc_status mapfcc_instance_parse(const char* text, mapfcc_instance** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new mapfcc_instance{mapfcc::parse_instance(text)};
  });
}

mapfcc_status mapfcc_instance_print(const mapfcc_instance* inst, char** out_text) {
  return guarded([&] {
    require(inst && out_text, "null argument");
    *out_text = copy_string(mapfcc::print_instance(inst->value));
  });
}

void mapfcc_instance_free(mapfcc_instance* inst) { delete inst; }

int mapfcc_instance_vertex_count(const mapfcc_instance* inst) {
  return inst ? inst->value.graph().vertex_count() : -1;
}

int mapfcc_instance_edge_count(const mapfcc_instance* inst) {
  return inst ? inst->value.graph().edge_count() : -1;
}

int mapfcc_instance_agent_count(const mapfcc_instance* inst) {
  return inst ? inst->value.agent_count() : -1;
}

int mapfcc_instance_range(const mapfcc_instance* inst) {
  return inst ? inst->value.range() : -1;
}

int mapfcc_instance_makespan_budget(const mapfcc_instance* inst) {
  return inst ? inst->value.makespan_budget() : -1;
}

int mapfcc_instance_is_tree(const mapfcc_instance* inst) {
  return inst && inst->value.graph().is_tree() ? 1 : 0;
}

mapfcc_status mapfcc_instance_agent(const mapfcc_instance* inst, int agent, int* start,
                                    int* target) {
  return guarded([&] {
    require(inst && start && target, "null argument");
    require(agent >= 0 && agent < inst->value.agent_count(), "agent index out of range");
    *start = inst->value.agent(agent).start;
    *target = inst->value.agent(agent).target;
  });
}

mapfcc_status mapfcc_instance_edges(const mapfcc_instance* inst, int* us, int* vs) {
  return guarded([&] {
    require(inst && us && vs, "null argument");
    size_t at = 0;
    for (const auto& [u, v] : inst->value.graph().edges()) {
      us[at] = u;
      vs[at] = v;
      ++at;
    }
  });
}

mapfcc_status mapfcc_solve(const mapfcc_instance* inst, int strategy, int64_t node_budget,
                           int estimate_connected_sets, int* outcome,
                           mapfcc_schedule** schedule, mapfcc_solve_stats* stats) {
  return guarded([&] {
    require(inst && outcome && schedule, "null argument");
    require(node_budget >= 0, "negative node budget");
    *schedule = nullptr;

    int used = strategy == MAPFCC_STRATEGY_AUTO ? resolve_auto(inst->value) : strategy;
    mapfcc::SolveOptions opts;
    opts.node_budget = node_budget;
    opts.estimate_connected_sets = estimate_connected_sets != 0;

    mapfcc::SolveResult result;
    switch (used) {
      case MAPFCC_STRATEGY_BFS:
        result = mapfcc::solve_bfs(inst->value, opts);
        break;
      case MAPFCC_STRATEGY_TREE:
        result = mapfcc::solve_tree(inst->value, opts);
        break;
      case MAPFCC_STRATEGY_EXPANDED: {
        mapfcc::DisjointPathsResult dp = mapfcc::solve_disjoint_paths(inst->value, opts);
        result.outcome = dp.outcome;
        result.schedule = std::move(dp.schedule);
        result.stats = dp.stats;
        result.diagnostic = std::move(dp.diagnostic);
        break;
      }
      case MAPFCC_STRATEGY_LOCAL:
        result = mapfcc::solve_local(inst->value, opts);
        break;
      case MAPFCC_STRATEGY_ORACLE:
        result = mapfcc::oracle_solve(inst->value, opts);
        break;
      default:
        throw std::invalid_argument("unknown strategy");
    }

    switch (result.outcome) {
      case mapfcc::SolveOutcome::kFeasible:
        *outcome = MAPFCC_FEASIBLE;
        break;
      case mapfcc::SolveOutcome::kInfeasible:
        *outcome = MAPFCC_INFEASIBLE;
        break;
      case mapfcc::SolveOutcome::kBudgetExceeded:
        *outcome = MAPFCC_BUDGET_EXCEEDED;
        break;
    }
    g_last_diagnostic = result.diagnostic;
    if (result.schedule) *schedule = new mapfcc_schedule{std::move(*result.schedule)};
    if (stats) {
      stats->expanded_nodes = result.stats.expanded_nodes;
      stats->generated_nodes = result.stats.generated_nodes;
      stats->max_frontier = result.stats.max_frontier;
      stats->connected_set_estimate = result.stats.connected_set_estimate;
      stats->strategy_used = used;
    }
  });
}

const char* mapfcc_last_diagnostic(void) { return g_last_diagnostic.c_str(); }

mapfcc_status mapfcc_schedule_parse(const char* text, mapfcc_schedule** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new mapfcc_schedule{mapfcc::parse_plan(text)};
  });
}

mapfcc_status mapfcc_schedule_print(const mapfcc_schedule* sched, char** out_text) {
  return guarded([&] {
    require(sched && out_text, "null argument");
    *out_text = copy_string(mapfcc::print_plan(sched->value));
  });
}

void mapfcc_schedule_free(mapfcc_schedule* sched) { delete sched; }

int mapfcc_schedule_agent_count(const mapfcc_schedule* sched) {
  if (!sched || sched->value.steps.empty()) return -1;
  return static_cast<int>(sched->value.steps[0].size());
}

int mapfcc_schedule_makespan(const mapfcc_schedule* sched) {
  return sched ? sched->value.makespan() : -1;
}

mapfcc_status mapfcc_schedule_positions(const mapfcc_schedule* sched, int turn,
                                        int* positions) {
  return guarded([&] {
    require(sched && positions, "null argument");
    require(turn >= 0 && turn <= sched->value.makespan(), "turn out of range");
    const mapfcc::Config& config = sched->value.steps[turn];
    for (size_t a = 0; a < config.size(); ++a) positions[a] = config[a];
  });
}

mapfcc_status mapfcc_validate(const mapfcc_instance* inst, const mapfcc_schedule* sched,
                              mapfcc_validation** out) {
  return guarded([&] {
    require(inst && sched && out, "null argument");
    *out = new mapfcc_validation{mapfcc::validate_schedule(inst->value, sched->value)};
  });
}

void mapfcc_validation_free(mapfcc_validation* report) { delete report; }

int mapfcc_validation_ok(const mapfcc_validation* report) {
  return report && report->value.ok() ? 1 : 0;
}

int mapfcc_validation_within_budget(const mapfcc_validation* report) {
  return report && report->value.within_budget ? 1 : 0;
}

int mapfcc_validation_start_connected(const mapfcc_validation* report) {
  return report && report->value.start_connected ? 1 : 0;
}

int mapfcc_validation_violation_count(const mapfcc_validation* report) {
  return report ? static_cast<int>(report->value.violations.size()) : -1;
}

mapfcc_status mapfcc_validation_violation(const mapfcc_validation* report, int index,
                                          int* turn, const char** kind, int* agent_a,
                                          int* agent_b, char** detail) {
  return guarded([&] {
    require(report && turn && kind && agent_a && agent_b && detail, "null argument");
    require(index >= 0 && index < static_cast<int>(report->value.violations.size()),
            "violation index out of range");
    const mapfcc::Violation& violation = report->value.violations[index];
    *turn = violation.turn;
    *kind = mapfcc::violation_kind_name(violation.kind);
    *agent_a = violation.agent_a;
    *agent_b = violation.agent_b;
    *detail = copy_string(violation.detail);
  });
}

mapfcc_status mapfcc_mcc_parse(const char* text, mapfcc_mcc** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new mapfcc_mcc{mapfcc::parse_mcc(text)};
  });
}

void mapfcc_mcc_free(mapfcc_mcc* mcc) { delete mcc; }

mapfcc_status mapfcc_reduce_mcc(const mapfcc_mcc* mcc, mapfcc_instance** out) {
  return guarded([&] {
    require(mcc && out, "null argument");
    *out = new mapfcc_instance{mapfcc::reduce_mcc(mcc->value).instance};
  });
}

mapfcc_status mapfcc_emit_mso(const mapfcc_instance* inst, char** out_text) {
  return guarded([&] {
    require(inst && out_text, "null argument");
    mapfcc::TimeExpandedGraph te = mapfcc::build_time_expanded(inst->value);
    *out_text = copy_string(mapfcc::emit_mso_structure(te, inst->value.range()));
  });
}

mapfcc_status mapfcc_count_connected_sets(const mapfcc_instance* inst, int vertex, int size,
                                          uint64_t* out_count) {
  return guarded([&] {
    require(inst && out_count, "null argument");
    *out_count = mapfcc::count_connected_sets(inst->value.graph(), vertex, size);
  });
}

} /* extern "C" */
