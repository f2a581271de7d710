#pragma once

#include <functional>

#include "mapfcc/search.hpp"

// Internal helpers shared by the solver translation units; not installed.

namespace mapfcc::detail {

// Enumerates legal joint moves from `from` in lexicographic order of the
// resulting position vectors; `admit(a, v)` can veto candidate vertices and
// must not depend on the positions of other agents.
void for_each_successor(const Instance& inst, const Config& from,
                        const std::function<bool(int, int)>& admit,
                        const std::function<void(const Config&)>& emit);

// Applies the degenerate decisions shared by every solver; returns true when
// `result` was decided without search.
bool decide_degenerate(const Instance& inst, SolveResult& result);

// Number of d-connected candidate occupied sets (size = agent count).
std::int64_t estimate_connected_sets(const Instance& inst);

}  // namespace mapfcc::detail
