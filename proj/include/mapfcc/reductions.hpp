#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mapfcc/instance.hpp"

namespace mapfcc {

// Multicolored-clique input: a graph whose vertex set is partitioned into k
// independent classes. Classes are padded with fresh isolated vertices at
// construction so they share a common size n.
class MccInstance {
 public:
  // Validates: classes disjointly cover the vertices, every class is an
  // independent set (throws std::invalid_argument otherwise), then pads.
  static MccInstance from_parts(const Graph& h, std::vector<std::vector<int>> classes);

  const Graph& h() const { return h_; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  int class_size() const { return class_size_; }  // common padded size

  // Class member p of class i (vertices keep their construction order;
  // padding vertices come last).
  int member(int i, int p) const { return classes_[i][p]; }
  // Class index of an H vertex.
  int class_of(int v) const { return class_of_[v]; }

 private:
  MccInstance() = default;
  Graph h_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  int class_size_ = 0;
};

// Injective id layout for the produced instance: vertex gadgets in class
// order (per class: path vertices p-major then spine), then edge gadgets in
// lexicographic class-pair order (owner side first), then the clique.
// Absent coordinates (skipped index j == i, or connector vertices with no
// incident H-edge) map to -1.
class GadgetLayout {
 public:
  int class_count() const { return k_; }
  int class_size() const { return n_; }
  int vertex_count() const { return vertex_count_; }

  int spine(int i, int j) const;              // a^i_j, j != i
  int path_vertex(int i, int p, int j) const; // v^i_{p,j}, j != i
  int edge_vertex(int x, int y, int p) const; // u^{x,y}_p (owner x, toward y)
  int clique_vertex(int i, int j) const;      // t^i_j, j != i

  // Top/bottom row of class i's paths: smallest/largest surviving index j.
  int top_index(int i) const { return i == 0 ? 1 : 0; }
  int bottom_index(int i) const { return i == k_ - 1 ? k_ - 2 : k_ - 1; }

  int agent_count() const { return k_ * (k_ - 1); }
  std::pair<int, int> agent_coords(int idx) const;  // (i, j) in lex order
  int agent_index(int i, int j) const;

  // Human-readable name of a produced-instance vertex, e.g. "a[0][1]".
  std::string describe(int id) const;

 private:
  friend GadgetLayout make_layout(const MccInstance& mcc);
  int k_ = 0, n_ = 0, vertex_count_ = 0;
  std::vector<int> spine_, pathv_, edgev_, clique_;
  std::vector<std::string> names_;
};

// Assigns ids to every gadget vertex of the reduction of mcc. Requires
// k >= 2 (std::invalid_argument otherwise).
GadgetLayout make_layout(const MccInstance& mcc);

// Edges internal to vertex gadget V_i: n horizontal paths over the surviving
// indices, the spine path, and one spoke a^i_j -- v^i_{p,j} per path vertex.
std::vector<std::pair<int, int>> build_vertex_gadget(const MccInstance& mcc,
                                                     const GadgetLayout& layout, int i);

// Edges internal to edge gadget E_{l,m} (l < m): u^{l,m}_p -- u^{m,l}_q for
// every H-edge between member p of class l and member q of class m.
std::vector<std::pair<int, int>> build_edge_gadget(const MccInstance& mcc,
                                                   const GadgetLayout& layout, int l, int m);

struct Reduction {
  Instance instance;
  GadgetLayout layout;
};

// Full reduction: vertex and edge gadgets, inter-gadget wiring, the clique Q
// joined to every edge-gadget vertex, and one agent per (i, j) pair starting
// on a^i_j with target t^i_j; d = 1, ell = 3. The produced instance is a
// yes-instance exactly when mcc's graph has a clique with one vertex per
// class. Requires k >= 2.
Reduction reduce_mcc(const MccInstance& mcc);

// Exhaustive multicolored-clique search over the class product; returns the
// lexicographically first clique (one vertex per class) or nothing.
std::optional<std::vector<int>> brute_clique(const MccInstance& mcc);

}  // namespace mapfcc
