#pragma once

#include <vector>

#include "mapfcc/graph.hpp"

namespace mapfcc {

struct Agent {
  int start = -1;
  int target = -1;
  bool operator==(const Agent&) const = default;
};

// A configuration assigns each agent a vertex; positions[a] is agent a's
// vertex. Valid configurations are injective.
using Config = std::vector<int>;

// One joint arrangement per turn: steps[0] is the start configuration,
// steps[i] the arrangement after turn i. makespan() == number of turns.
struct Schedule {
  std::vector<Config> steps;

  int makespan() const { return static_cast<int>(steps.size()) - 1; }
  bool operator==(const Schedule&) const = default;
};

// A problem instance: graph, per-agent start/target, communication range d,
// and makespan budget ell.
class Instance {
 public:
  Instance(Graph graph, std::vector<Agent> agents, int d, int ell);

  const Graph& graph() const { return graph_; }
  const std::vector<Agent>& agents() const { return agents_; }
  const Agent& agent(int a) const { return agents_[a]; }
  int agent_count() const { return static_cast<int>(agents_.size()); }
  int range() const { return d_; }
  int makespan_budget() const { return ell_; }

  Config starts() const;
  Config targets() const;
  bool starts_equal_targets() const;

  bool operator==(const Instance&) const = default;

 private:
  Graph graph_;
  std::vector<Agent> agents_;
  int d_ = 1;
  int ell_ = 0;
};

}  // namespace mapfcc
