#include "mapfcc/validate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mapfcc {

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kWrongStart: return "WrongStart";
    case ViolationKind::kNonMove: return "NonMove";
    case ViolationKind::kCollision: return "Collision";
    case ViolationKind::kSwap: return "Swap";
    case ViolationKind::kDisconnected: return "Disconnected";
    case ViolationKind::kWrongTarget: return "WrongTarget";
  }
  return "Unknown";
}

ValidationReport validate_schedule(const Instance& inst, const Schedule& sched) {
  const Graph& g = inst.graph();
  const int k = inst.agent_count();
  if (sched.steps.empty())
    throw std::invalid_argument("validate: schedule must contain the start arrangement");
  for (const Config& step : sched.steps) {
    if (static_cast<int>(step.size()) != k)
      throw std::invalid_argument("validate: arrangement size does not match agent count");
    for (int v : step)
      if (!g.has_vertex(v)) throw std::invalid_argument("validate: vertex id out of range");
  }

  ValidationReport report;
  const int mu = sched.makespan();
  report.within_budget = mu <= inst.makespan_budget();

  auto add = [&report](ViolationKind kind, int turn, int a, int b, std::string detail) {
    report.violations.push_back({kind, turn, a, b, std::move(detail)});
  };

  for (int a = 0; a < k; ++a)
    if (sched.steps[0][a] != inst.agent(a).start)
      add(ViolationKind::kWrongStart, 0, a, -1,
          "agent " + std::to_string(a) + " starts at " + std::to_string(sched.steps[0][a]) +
              ", expected " + std::to_string(inst.agent(a).start));
  for (int a = 0; a < k; ++a)
    if (sched.steps[mu][a] != inst.agent(a).target)
      add(ViolationKind::kWrongTarget, mu, a, -1,
          "agent " + std::to_string(a) + " ends at " + std::to_string(sched.steps[mu][a]) +
              ", expected " + std::to_string(inst.agent(a).target));

  for (int i = 0; i <= mu; ++i) {
    const Config& cur = sched.steps[i];
    // Collisions: any repeated vertex in one arrangement.
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (cur[a] == cur[b])
          add(ViolationKind::kCollision, i, a, b,
              "agents " + std::to_string(a) + " and " + std::to_string(b) + " share vertex " +
                  std::to_string(cur[a]));
    if (i == 0) continue;
    const Config& prev = sched.steps[i - 1];
    for (int a = 0; a < k; ++a)
      if (cur[a] != prev[a] && !g.has_edge(prev[a], cur[a]))
        add(ViolationKind::kNonMove, i, a, -1,
            "agent " + std::to_string(a) + " jumped " + std::to_string(prev[a]) + " -> " +
                std::to_string(cur[a]));
    // Swap: adjacent agents exchanging positions in one turn.
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (cur[a] == prev[b] && cur[b] == prev[a] && g.has_edge(prev[a], prev[b]))
          add(ViolationKind::kSwap, i, a, b,
              "agents " + std::to_string(a) + " and " + std::to_string(b) +
                  " swapped across edge " + std::to_string(prev[a]) + "-" +
                  std::to_string(prev[b]));
  }

  // Connectivity must hold at every turn i in [mu]; the start arrangement is
  // only reported informationally (the movement rules never inspect it).
  auto connected = [&](const Config& c) {
    std::vector<int> occupied(c.begin(), c.end());
    std::sort(occupied.begin(), occupied.end());
    occupied.erase(std::unique(occupied.begin(), occupied.end()), occupied.end());
    return is_d_connected(g, inst.range(), occupied);
  };
  report.start_connected = connected(sched.steps[0]);
  for (int i = 1; i <= mu; ++i)
    if (!connected(sched.steps[i]))
      add(ViolationKind::kDisconnected, i, -1, -1,
          "occupied set not " + std::to_string(inst.range()) + "-connected");

  return report;
}

}  // namespace mapfcc
