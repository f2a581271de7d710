#pragma once

#include <vector>

#include "mapfcc/expanded.hpp"
#include "mapfcc/graph.hpp"

namespace mapfcc {

// Rooted tree decomposition; node i's bag is bags[i] (sorted vertex ids),
// parent[i] == -1 exactly for the root.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<int> parent;

  int node_count() const { return static_cast<int>(bags.size()); }
  int width() const;
};

// Checks the three decomposition conditions against g: every vertex in some
// bag, every edge covered by some bag, and each vertex's bag set inducing a
// connected subtree. Also checks the tree shape itself.
bool is_valid_decomposition(const TreeDecomposition& td, const Graph& g);

// Min-fill elimination-ordering heuristic (ties broken toward lower ids).
// Exact on trees (width 1) and cliques (width n-1); an upper bound in general.
// The returned decomposition always satisfies is_valid_decomposition.
TreeDecomposition treewidth_upper_bound(const Graph& g);

// Underlying simple graph of the time-expanded graph: one edge per endpoint
// pair regardless of labels, self-loops dropped.
Graph te_underlying_graph(const TimeExpandedGraph& te);

// Lifts a decomposition of the base graph to the time-expanded graph along a
// witness: each bag vertex is replaced by all its ell+1 copies, then each
// agent's path terminals are added to every bag that meets the path. The
// result is validated against the time-expanded graph and its width is at
// most 3*(ell+1)*(w+1) - 1 where w is the input width (std::logic_error if
// either check fails). Throws std::invalid_argument when td does not decompose
// the base graph or the witness is not valid for te.
TreeDecomposition lift_tree_decomposition(const TreeDecomposition& td,
                                          const TimeExpandedGraph& te,
                                          const PathsWitness& witness);

}  // namespace mapfcc
