#pragma once

#include <vector>

#include "mapfcc/instance.hpp"
#include "mapfcc/search.hpp"

namespace mapfcc {

struct BallExtract {
  Graph graph;                   // induced subgraph on the ball, dense ids
  std::vector<int> to_original;  // ball id -> original id, ascending
};

// Induced subgraph on the closed ball N^radius[center]. Vertices are
// renumbered in ascending original-id order. radius >= 0.
BallExtract extract_ball(const Graph& g, int center, int radius);

enum class LocalInner { kBfs, kDisjointPaths };

// Locality reduction: any schedule keeps every occupied vertex (and every
// communication witness path) inside the radius k*d + ell ball around the
// first agent's start, so the instance is solved on that ball and the
// schedule mapped back. A start outside the ball means the start set cannot
// be d-connected; a target outside the ball is unreachable within the budget.
// Decision and makespan agree with solve_bfs on every instance.
SolveResult solve_local(const Instance& inst, const SolveOptions& opts = {},
                        LocalInner inner = LocalInner::kBfs);

}  // namespace mapfcc
