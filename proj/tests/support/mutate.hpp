#pragma once

#include <algorithm>
#include <vector>

#include "mapfcc/expanded.hpp"
#include "support/test_rng.hpp"

namespace testsupport {

struct WitnessSets {
  std::vector<mapfcc::TeEdge> s;
  std::vector<std::vector<int>> x;
};

enum class MutationKind { kDeleteS, kMoveS, kDeleteX, kMoveX };

inline const char* mutation_name(MutationKind kind) {
  switch (kind) {
    case MutationKind::kDeleteS: return "delete-S";
    case MutationKind::kMoveS: return "move-S";
    case MutationKind::kDeleteX: return "delete-X";
    case MutationKind::kMoveX: return "move-X";
  }
  return "?";
}

// Applies one random structure-preserving mutation (the sets stay legal
// inputs for the property checks, only their content changes). Requires a
// nonempty S and at least one nonempty X layer.
inline MutationKind mutate_sets(const mapfcc::TimeExpandedGraph& te, WitnessSets& w,
                                TestRng& rng) {
  auto nonempty_layer = [&]() {
    std::vector<int> layers;
    for (std::size_t i = 0; i < w.x.size(); ++i)
      if (!w.x[i].empty()) layers.push_back(static_cast<int>(i));
    return layers[rng.below(static_cast<int>(layers.size()))];
  };

  MutationKind kind = static_cast<MutationKind>(rng.below(4));
  switch (kind) {
    case MutationKind::kDeleteS: {
      w.s.erase(w.s.begin() + rng.below(static_cast<int>(w.s.size())));
      break;
    }
    case MutationKind::kMoveS: {
      std::vector<mapfcc::TeEdge> all = te.edges();
      mapfcc::TeEdge pick{};
      do {
        pick = all[rng.below(static_cast<int>(all.size()))];
      } while (std::find(w.s.begin(), w.s.end(), pick) != w.s.end());
      w.s.erase(w.s.begin() + rng.below(static_cast<int>(w.s.size())));
      w.s.push_back(pick);
      std::sort(w.s.begin(), w.s.end());
      break;
    }
    case MutationKind::kDeleteX: {
      auto& layer = w.x[nonempty_layer()];
      layer.erase(layer.begin() + rng.below(static_cast<int>(layer.size())));
      break;
    }
    case MutationKind::kMoveX: {
      auto& layer = w.x[nonempty_layer()];
      auto it = layer.begin() + rng.below(static_cast<int>(layer.size()));
      int dropped = *it;
      layer.erase(it);
      int pick;
      do {
        pick = rng.below(te.vertex_count());
        // Re-adding the dropped vertex would be a no-op, not a mutation.
      } while (pick == dropped || std::find(layer.begin(), layer.end(), pick) != layer.end());
      layer.push_back(pick);
      std::sort(layer.begin(), layer.end());
      break;
    }
  }
  return kind;
}

}  // namespace testsupport
