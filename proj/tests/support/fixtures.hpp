#pragma once

#include <utility>
#include <vector>

#include "mapfcc/graph.hpp"
#include "mapfcc/instance.hpp"

namespace testsupport {

// 4x4 frame: four horizontal paths of length 3, joined only along the left
// and right columns. Row-major ids, so row r spans 4r..4r+3.
inline mapfcc::Graph frame_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 3; ++c) edges.emplace_back(4 * r + c, 4 * r + c + 1);
  for (int r = 0; r < 3; ++r) {
    edges.emplace_back(4 * r, 4 * (r + 1));          // left column
    edges.emplace_back(4 * r + 3, 4 * (r + 1) + 3);  // right column
  }
  return mapfcc::Graph::from_edges(16, edges);
}

// One agent per row, left end to right end.
inline std::vector<mapfcc::Agent> frame_agents() {
  return {{0, 3}, {4, 7}, {8, 11}, {12, 15}};
}

inline mapfcc::Instance frame_instance(int d, int ell) {
  return mapfcc::Instance(frame_graph(), frame_agents(), d, ell);
}

}  // namespace testsupport
