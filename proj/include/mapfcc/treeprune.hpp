#pragma once

#include <vector>

#include "mapfcc/instance.hpp"
#include "mapfcc/search.hpp"

namespace mapfcc {

// One hub-reduction step: which hub was processed, which vertices were
// deleted, and which hub neighbors inside the trimmed component were kept.
// All ids are in the original tree's id space.
struct PruneStep {
  int hub = -1;
  std::vector<int> removed;          // sorted
  std::vector<int> kept_neighbors;   // sorted, at most k of them
};

struct PruneTrace {
  std::vector<PruneStep> steps;
  // kept_to_original[p] = original id of pruned-tree vertex p.
  std::vector<int> kept_to_original;
};

struct PruneResult {
  Graph tree;              // pruned tree, dense renumbered ids
  std::vector<Agent> agents;  // starts/targets remapped into the pruned tree
  PruneTrace trace;
};

// Neighbors of u that lie on some unique tree path between u and an agent's
// start or target (the path is empty when u coincides with that endpoint).
// At most 2k vertices. Throws std::invalid_argument on non-tree input or bad u.
std::vector<int> relevant_neighbors(const Graph& tree, const std::vector<Agent>& agents, int u);

// Single reduction at hub u (requires deg(u) > 3k): deletes the component of
// tree minus the relevant neighbors that contains u, keeping u and its k
// lowest-id neighbors inside that component (all of them if fewer than k).
// Throws std::invalid_argument if deg(u) <= 3k or input is not a tree.
PruneResult prune_once(const Graph& tree, const std::vector<Agent>& agents, int u);

// Repeats prune_once (lowest-id qualifying hub first) until max degree <= 3k.
// Starts and targets are never removed; the result is checked to still be a
// tree with max degree <= 3k (std::logic_error otherwise).
PruneResult prune(const Graph& tree, const std::vector<Agent>& agents);

// Tree-instance solver: prunes, solves the pruned instance with solve_bfs,
// maps the schedule back to original ids, and re-validates it on the original
// tree. Throws std::invalid_argument when the instance graph is not a tree
// (use solve_bfs directly in that case).
SolveResult solve_tree(const Instance& inst, const SolveOptions& opts = {});

}  // namespace mapfcc
