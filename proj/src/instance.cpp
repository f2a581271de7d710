#include "mapfcc/instance.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mapfcc {

Instance::Instance(Graph graph, std::vector<Agent> agents, int d, int ell)
    : graph_(std::move(graph)), agents_(std::move(agents)), d_(d), ell_(ell) {
  if (agents_.empty()) throw std::invalid_argument("instance: at least one agent required");
  if (d_ < 1) throw std::invalid_argument("instance: d must be >= 1");
  if (ell_ < 0) throw std::invalid_argument("instance: ell must be >= 0");
  std::vector<char> start_seen(graph_.vertex_count(), 0), target_seen(graph_.vertex_count(), 0);
  for (const Agent& a : agents_) {
    if (!graph_.has_vertex(a.start) || !graph_.has_vertex(a.target))
      throw std::invalid_argument("instance: agent endpoint out of range");
    if (start_seen[a.start])
      throw std::invalid_argument("instance: duplicate start vertex " + std::to_string(a.start));
    if (target_seen[a.target])
      throw std::invalid_argument("instance: duplicate target vertex " + std::to_string(a.target));
    start_seen[a.start] = target_seen[a.target] = 1;
  }
}

Config Instance::starts() const {
  Config c(agents_.size());
  for (size_t a = 0; a < agents_.size(); ++a) c[a] = agents_[a].start;
  return c;
}

Config Instance::targets() const {
  Config c(agents_.size());
  for (size_t a = 0; a < agents_.size(); ++a) c[a] = agents_[a].target;
  return c;
}

bool Instance::starts_equal_targets() const {
  for (const Agent& a : agents_)
    if (a.start != a.target) return false;
  return true;
}

}  // namespace mapfcc
