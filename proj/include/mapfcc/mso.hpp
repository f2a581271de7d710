#pragma once

#include <string>
#include <vector>

#include "mapfcc/expanded.hpp"

namespace mapfcc {

struct FormulaResult {
  bool satisfied = false;
  // Name of the first failing conjunct ("phi1".."phi8"), empty if satisfied.
  std::string first_failure;
};

// Evaluates the eight-part sentence phi over the labelled time-expanded
// structure with S and X_0..X_ell bound to the given sets. Distance atoms are
// computed by truncated BFS over communication-labelled edges; connectivity
// by the two-block partition criterion realized as connectivity of the
// d-power restricted to X. The result equals the conjunction of
// check_properties on every input.
FormulaResult evaluate_formula(const TimeExpandedGraph& te,
                               const std::vector<TeEdge>& s_edges,
                               const std::vector<std::vector<int>>& x_sets,
                               int d);

// Renders the labelled structure (vertices with layer labels, (pair, label)
// edge incidences) and the sentence phi in the documented prefix notation.
// Deterministic: byte-identical output for equal inputs. Format: "msogi 1".
std::string emit_mso_structure(const TimeExpandedGraph& te, int d);

}  // namespace mapfcc
