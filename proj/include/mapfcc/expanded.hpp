#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapfcc/instance.hpp"
#include "mapfcc/search.hpp"

namespace mapfcc {

// Edge labels of the time-expanded graph. Stored as a bitmask per endpoint
// pair: the graph is a labelled multigraph whose parallel edges differ only by
// label, so duplicates merge into one adjacency entry carrying a label set.
// All predicates quantify over (pair, label) incidences.
enum class TeLabel : std::uint8_t {
  kCopy = 1,           // v_{i-1} -- v_i
  kCommunication = 2,  // u_i -- v_i for uv in E
  kCross = 4,          // u_{i-1} -- v_i for uv in E
  kAgent = 8,          // s_0(a)_0 -- t(a)_ell
};

const char* te_label_name(TeLabel label);

struct TeEdge {
  int u = -1;  // u <= v (normalized); u == v only for agent edges at ell == 0
  int v = -1;
  TeLabel label{};
  bool operator==(const TeEdge&) const = default;
  auto operator<=>(const TeEdge&) const = default;
};

// Time-expanded graph: ell+1 layers of n vertices; copy of vertex v at layer i
// has id i*n + v and label "vertex_i".
class TimeExpandedGraph {
 public:
  const Instance& instance() const { return inst_; }
  int base_vertex_count() const { return n_; }
  int layers() const { return ell_ + 1; }
  int ell() const { return ell_; }
  int vertex_count() const { return n_ * (ell_ + 1); }

  int id_of(int v, int layer) const { return layer * n_ + v; }
  int layer_of(int id) const { return id / n_; }
  int base_of(int id) const { return id % n_; }

  bool has_edge(int u, int v, TeLabel label) const;
  // Sorted (neighbor id, label bitmask) pairs; self-loop entries list the
  // vertex itself.
  const std::vector<std::pair<int, std::uint8_t>>& adjacency(int id) const {
    return adj_[id];
  }

  // All (pair, label) incidences, sorted by (u, v, label).
  std::vector<TeEdge> edges() const;
  std::int64_t label_count(TeLabel label) const;

 private:
  friend TimeExpandedGraph build_time_expanded(const Instance& inst);
  explicit TimeExpandedGraph(const Instance& inst);
  void add_edge(int u, int v, TeLabel label);

  Instance inst_;
  int n_ = 0;
  int ell_ = 0;
  std::vector<std::vector<std::pair<int, std::uint8_t>>> adj_;
  std::array<std::int64_t, 4> label_counts_{};
};

// Construction: copy edges v_{i-1}v_i (n*ell of them), communication edges
// u_i v_i per original edge and layer (m*(ell+1)), cross edges u_{i-1}v_i and
// v_{i-1}u_i (2*m*ell), and one agent edge s_0(a)_0 -- t(a)_ell per agent (k).
TimeExpandedGraph build_time_expanded(const Instance& inst);

// A set of layer-monotone vertex-disjoint paths, one per agent: layers[a][i]
// is the original-graph vertex agent a's path visits at layer i.
struct PathsWitness {
  std::vector<std::vector<int>> layers;  // [k][ell+1], base vertex ids

  int agent_count() const { return static_cast<int>(layers.size()); }
  int ell() const { return layers.empty() ? -1 : static_cast<int>(layers[0].size()) - 1; }

  // Edge set S used by the paths: copy/cross (pair, label) incidences in
  // time-expanded ids, sorted and deduplicated.
  std::vector<TeEdge> edge_set(const TimeExpandedGraph& te) const;
  // X_i = vertices used at layer i, as time-expanded ids, sorted.
  std::vector<std::vector<int>> layer_sets(const TimeExpandedGraph& te) const;

  bool operator==(const PathsWitness&) const = default;
};

// Schedule -> witness. Schedules shorter than the budget are padded by
// staying at the target. Throws std::invalid_argument when the schedule does
// not validate, exceeds the budget, or when the witness cannot satisfy the
// layer-connectivity condition that the schedule semantics never inspects
// (start set, or target set when padding a makespan-0 schedule).
PathsWitness schedule_to_paths(const TimeExpandedGraph& te, const Schedule& sched);

// Witness -> schedule of makespan ell. Verifies the witness path conditions:
//   vertex-disjointness; (1) one vertex per layer, consecutive vertices joined
//   by copy/cross edges; (2) endpoints s_0(a)_0 and t(a)_ell; (3) no two paths
//   crossing one original edge in opposite directions; (4) every layer set
//   d-connected. Throws std::invalid_argument naming the violated condition.
// The produced schedule passes validate_schedule.
Schedule paths_to_schedule(const TimeExpandedGraph& te, const PathsWitness& witness);

// The eight structural properties of (S, X_0..X_ell) characterizing valid
// witness encodings; evaluated independently of one another. S entries must
// be (pair, label) incidences present in te; X_i entries vertex ids of te
// (std::invalid_argument otherwise).
//  0: X_i within layer i            1: S uses only copy/cross labels
//  2: interior X degree 2, linked to adjacent layers
//  3: boundary X degree 1 (0 when ell == 0)
//  4: vertices outside all X untouched by S
//  5: each agent edge's endpoints joined by an S-path (decided structurally
//     from S's components; at ell == 0 the agent edge must be a self-loop on
//     a vertex of X_0)
//  6: no opposite crossing of one original edge (two distinct S edges)
//  7: every X_i d-connected along communication edges
std::array<bool, 8> check_properties(const TimeExpandedGraph& te,
                                     const std::vector<TeEdge>& s_edges,
                                     const std::vector<std::vector<int>>& x_sets);

struct DisjointPathsResult {
  SolveOutcome outcome = SolveOutcome::kInfeasible;
  std::optional<PathsWitness> witness;   // padded to ell layers
  std::optional<Schedule> schedule;      // minimum-makespan schedule
  SearchStats stats;
  std::string diagnostic;

  bool feasible() const { return outcome == SolveOutcome::kFeasible; }
};

// Exact witness search: extends all k paths one layer at a time with
// incremental pruning (per-layer labels/degrees, swap exclusion, layer
// connectivity, per-agent endpoint reachability), memoizing failed states.
// Iterative deepening over the layer count, so `schedule` has minimum
// makespan. Decision agrees with solve_bfs on every instance.
DisjointPathsResult solve_disjoint_paths(const Instance& inst, const SolveOptions& opts = {});

}  // namespace mapfcc
