#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapfcc/instance.hpp"
#include "mapfcc/validate.hpp"

namespace mapfcc {

// Canonical byte encoding of a configuration (fixed-width vertex ids in agent
// order); hashable and totally ordered.
std::string config_key(const Config& c);

struct SearchStats {
  std::int64_t expanded_nodes = 0;
  std::int64_t generated_nodes = 0;
  std::int64_t max_frontier = 0;
  std::int64_t connected_set_estimate = -1;  // -1 = not computed
};

enum class SolveOutcome {
  kFeasible,
  kInfeasible,
  kBudgetExceeded,
};

struct SolveResult {
  SolveOutcome outcome = SolveOutcome::kInfeasible;
  std::optional<Schedule> schedule;  // set iff feasible; minimum makespan
  SearchStats stats;
  std::string diagnostic;  // set on early infeasibility / budget exhaustion

  bool feasible() const { return outcome == SolveOutcome::kFeasible; }
};

struct SolveOptions {
  std::int64_t node_budget = 0;  // max expanded nodes; 0 = unlimited
  bool estimate_connected_sets = false;
};

// All legal one-turn joint moves from c, in lexicographic order of the
// resulting position vectors. Each successor respects: one step within closed
// neighborhoods, injectivity, no swaps against c, and a d-connected occupied
// set. Throws std::invalid_argument if c itself is ill-formed.
std::vector<Config> successors(const Instance& inst, const Config& c);

// Breadth-first search over configurations; returns a feasible schedule of
// minimum makespan if that minimum is <= the instance budget, else none.
// Degenerate rules (shared by every solver here):
//   - ell == 0: feasible iff starts == targets (empty-move schedule);
//   - ell >= 1 and start set not d-connected: infeasible with a diagnostic.
SolveResult solve_bfs(const Instance& inst, const SolveOptions& opts = {});

// Independent ground-truth solver: iterative-deepening DFS over joint moves
// with no visited set beyond the current branch. Same decision semantics as
// solve_bfs on every input; intended for differential testing.
SolveResult oracle_solve(const Instance& inst, const SolveOptions& opts = {});

// Number of connected vertex sets of exactly the given size that contain
// `vertex` (connected in g). Exact enumeration; diagnostic use only.
// Throws std::invalid_argument on bad vertex or size < 1.
std::uint64_t count_connected_sets(const Graph& g, int vertex, int size);

}  // namespace mapfcc
