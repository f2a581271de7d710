#pragma once

#include <set>
#include <utility>
#include <vector>

#include "mapfcc/graph.hpp"
#include "support/test_rng.hpp"

namespace testsupport {

// Tree on n >= 1 vertices decoded from a Pruefer sequence drawn from rng.
// Every labeled tree is reachable, so seeded draws cover shapes from paths
// to stars.
inline mapfcc::Graph random_tree(int n, TestRng& rng) {
  if (n == 1) return mapfcc::Graph(1);
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = rng.below(n);
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<std::pair<int, int>> edges;
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1) leaves.insert(s);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return mapfcc::Graph::from_edges(n, edges);
}

}  // namespace testsupport
