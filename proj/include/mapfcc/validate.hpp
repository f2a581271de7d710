#pragma once

#include <string>
#include <vector>

#include "mapfcc/instance.hpp"

namespace mapfcc {

enum class ViolationKind {
  kWrongStart,    // steps[0] != starts
  kNonMove,       // agent left its closed neighborhood in one turn
  kCollision,     // two agents share a vertex
  kSwap,          // two adjacent agents exchanged positions in one turn
  kDisconnected,  // occupied set not d-connected at some turn i >= 1
  kWrongTarget,   // final arrangement != targets
};

const char* violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  int turn = -1;     // index into steps (the arrangement where it shows)
  int agent_a = -1;  // first agent involved, -1 if not agent-specific
  int agent_b = -1;  // second agent (collisions/swaps), else -1
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool within_budget = false;   // makespan <= instance budget; reported
                                // separately, never a violation
  bool start_connected = true;  // s_0 d-connectivity; informational only

  bool ok() const { return violations.empty(); }
};

// Checks a schedule against the movement rules: correct start and target
// arrangements, one-step moves within closed neighborhoods, no collisions, no
// swaps, and d-connected occupied sets at every turn i in [makespan]. The
// start arrangement's connectivity is reported as a warning, not a violation.
// Throws std::invalid_argument on shape errors (empty schedule, agent-count
// mismatch, out-of-range vertex ids).
ValidationReport validate_schedule(const Instance& inst, const Schedule& sched);

}  // namespace mapfcc
