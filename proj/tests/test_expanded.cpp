#include <doctest.h>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapfcc/expanded.hpp"
#include "mapfcc/graph.hpp"
#include "mapfcc/instance.hpp"
#include "mapfcc/search.hpp"
#include "mapfcc/validate.hpp"
#include "support/enumerate_graphs.hpp"
#include "support/fixtures.hpp"
#include "support/mini_validate.hpp"
#include "support/test_rng.hpp"
#include "support/trees.hpp"

using namespace mapfcc;
using namespace testsupport;

namespace {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

bool all_true(const std::array<bool, 8>& props) {
  for (bool b : props)
    if (!b) return false;
  return true;
}

Instance random_instance(TestRng& rng, int max_n, int max_k, int max_ell) {
  int n = 2 + rng.below(max_n - 1);
  Graph g = random_tree(n, rng);
  for (int extra = rng.below(3); extra > 0; --extra) {
    int u = rng.below(n), v = rng.below(n);
    if (u != v && !g.has_edge(u, v)) {
      auto e = g.edges();
      e.emplace_back(std::min(u, v), std::max(u, v));
      g = Graph::from_edges(n, e);
    }
  }
  int k = 1 + rng.below(std::min(max_k, n));
  std::vector<int> sv = rng.distinct(n, k), tv = rng.distinct(n, k);
  std::vector<Agent> agents;
  for (int a = 0; a < k; ++a) agents.push_back({sv[a], tv[a]});
  return Instance(g, agents, 1 + rng.below(2), rng.below(max_ell + 1));
}

}  // namespace

TEST_CASE("time expansion has the promised shape") {
  Instance inst = frame_instance(2, 3);
  TimeExpandedGraph te = build_time_expanded(inst);
  int n = 16, m = 18, ell = 3, k = 4;
  CHECK(te.base_vertex_count() == n);
  CHECK(te.layers() == ell + 1);
  CHECK(te.vertex_count() == n * (ell + 1));
  CHECK(te.label_count(TeLabel::kCopy) == n * ell);
  CHECK(te.label_count(TeLabel::kCommunication) == m * (ell + 1));
  CHECK(te.label_count(TeLabel::kCross) == 2 * m * ell);
  CHECK(te.label_count(TeLabel::kAgent) == k);
  auto edges = te.edges();
  CHECK(static_cast<int>(edges.size()) == n * ell + m * (ell + 1) + 2 * m * ell + k);
  CHECK(std::is_sorted(edges.begin(), edges.end()));

  // id arithmetic and a few specific incidences
  CHECK(te.id_of(5, 2) == 2 * 16 + 5);
  CHECK(te.layer_of(37) == 2);
  CHECK(te.base_of(37) == 5);
  CHECK(te.has_edge(te.id_of(4, 0), te.id_of(4, 1), TeLabel::kCopy));
  CHECK(te.has_edge(te.id_of(4, 1), te.id_of(4, 0), TeLabel::kCopy));
  CHECK(te.has_edge(te.id_of(0, 2), te.id_of(1, 2), TeLabel::kCommunication));
  CHECK(te.has_edge(te.id_of(0, 1), te.id_of(1, 2), TeLabel::kCross));
  CHECK(te.has_edge(te.id_of(1, 1), te.id_of(0, 2), TeLabel::kCross));
  CHECK(te.has_edge(te.id_of(0, 0), te.id_of(3, 3), TeLabel::kAgent));
  CHECK(!te.has_edge(te.id_of(0, 0), te.id_of(2, 1), TeLabel::kCross));
  CHECK(!te.has_edge(te.id_of(0, 0), te.id_of(1, 1), TeLabel::kCommunication));

  for (int id = 0; id < te.vertex_count(); ++id)
    CHECK(std::is_sorted(te.adjacency(id).begin(), te.adjacency(id).end()));
}

TEST_CASE("zero budget expansion keeps agent self-loops") {
  Graph g = path_graph(3);
  Instance inst(g, {{0, 0}, {2, 2}}, 1, 0);
  TimeExpandedGraph te = build_time_expanded(inst);
  CHECK(te.label_count(TeLabel::kCopy) == 0);
  CHECK(te.label_count(TeLabel::kCross) == 0);
  CHECK(te.label_count(TeLabel::kCommunication) == 2);
  CHECK(te.label_count(TeLabel::kAgent) == 2);
  CHECK(te.has_edge(0, 0, TeLabel::kAgent));
  CHECK(te.has_edge(2, 2, TeLabel::kAgent));
  // label name mapping
  CHECK(std::string(te_label_name(TeLabel::kCopy)) == "copy");
  CHECK(std::string(te_label_name(TeLabel::kCommunication)) == "communication");
  CHECK(std::string(te_label_name(TeLabel::kCross)) == "cross");
  CHECK(std::string(te_label_name(TeLabel::kAgent)) == "agent");
}

TEST_CASE("schedule to witness round trip with padding") {
  Instance inst(path_graph(4), {{0, 2}, {1, 3}}, 1, 4);
  SolveResult r = solve_bfs(inst);
  REQUIRE(r.feasible());
  CHECK(r.schedule->makespan() == 2);  // shorter than the budget of 4
  TimeExpandedGraph te = build_time_expanded(inst);
  PathsWitness w = schedule_to_paths(te, *r.schedule);
  REQUIRE(w.agent_count() == 2);
  CHECK(w.ell() == 4);
  CHECK(w.layers[0] == std::vector<int>{0, 1, 2, 2, 2});  // padded by staying
  CHECK(w.layers[1] == std::vector<int>{1, 2, 3, 3, 3});

  Schedule back = paths_to_schedule(te, w);
  CHECK(back.makespan() == 4);
  for (int i = 0; i <= 4; ++i)
    for (int a = 0; a < 2; ++a) CHECK(back.steps[i][a] == w.layers[a][i]);
  CHECK(validate_schedule(inst, back).ok());

  // The witness sets satisfy all eight properties.
  auto s = w.edge_set(te);
  auto x = w.layer_sets(te);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(all_true(check_properties(te, s, x)));
}

TEST_CASE("witness edge and layer sets") {
  Instance inst(path_graph(2), {{0, 1}}, 1, 1);
  TimeExpandedGraph te = build_time_expanded(inst);
  PathsWitness w{{{0, 1}}};
  auto s = w.edge_set(te);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == TeEdge{0, 3, TeLabel::kCross});  // 0 at layer 0 -> 1 at layer 1
  auto x = w.layer_sets(te);
  CHECK(x == std::vector<std::vector<int>>{{0}, {3}});

  PathsWitness stay{{{0, 0}}};
  CHECK(stay.edge_set(te) == std::vector<TeEdge>{{0, 2, TeLabel::kCopy}});
  Instance far(Graph(3), {{0, 0}, {2, 2}}, 1, 1);
  TimeExpandedGraph fe = build_time_expanded(far);
  PathsWitness no_edge{{{0, 2}}};
  CHECK_THROWS_AS(no_edge.edge_set(fe), std::invalid_argument);
}

TEST_CASE("witness checks reject each violated path condition") {
  Instance inst(path_graph(5), {{1, 0}, {2, 3}}, 1, 1);
  TimeExpandedGraph te = build_time_expanded(inst);

  CHECK_THROWS_WITH_AS(paths_to_schedule(te, PathsWitness{{{1, 0}}}),
                       doctest::Contains("wrong number of paths"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(paths_to_schedule(te, PathsWitness{{{1, 0, 0}, {2, 3}}}),
                       doctest::Contains("one vertex per layer"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(paths_to_schedule(te, PathsWitness{{{1, 9}, {2, 3}}}),
                       doctest::Contains("out of range"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(paths_to_schedule(te, PathsWitness{{{1, 0}, {1, 3}}}),
                       doctest::Contains("disjoint"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(paths_to_schedule(te, PathsWitness{{{1, 3}, {2, 4}}}),
                       doctest::Contains("condition 1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(paths_to_schedule(te, PathsWitness{{{1, 1}, {2, 3}}}),
                       doctest::Contains("condition 2"), std::invalid_argument);

  Instance swap_inst(path_graph(2), {{0, 1}, {1, 0}}, 1, 1);
  TimeExpandedGraph se = build_time_expanded(swap_inst);
  CHECK_THROWS_WITH_AS(paths_to_schedule(se, PathsWitness{{{0, 1}, {1, 0}}}),
                       doctest::Contains("condition 3"), std::invalid_argument);

  Instance drift(path_graph(5), {{1, 0}, {2, 3}}, 1, 1);
  TimeExpandedGraph de = build_time_expanded(drift);
  CHECK_THROWS_WITH_AS(paths_to_schedule(de, PathsWitness{{{1, 0}, {2, 3}}}),
                       doctest::Contains("condition 4"), std::invalid_argument);
}

TEST_CASE("schedule conversion guards its preconditions") {
  Instance inst(path_graph(4), {{0, 2}, {1, 3}}, 1, 4);
  TimeExpandedGraph te = build_time_expanded(inst);
  Schedule bad{{{0, 1}, {2, 1}, {2, 3}}};  // agent 0 teleports 0 -> 2
  CHECK_THROWS_WITH_AS(schedule_to_paths(te, bad), doctest::Contains("does not validate"),
                       std::invalid_argument);
  Schedule long_one{{{0, 1}, {1, 2}, {2, 3}, {1, 2}, {2, 3}, {1, 2}, {2, 3}}};
  CHECK_THROWS_WITH_AS(schedule_to_paths(te, long_one), doctest::Contains("budget"),
                       std::invalid_argument);

  // Padding a zero-length schedule needs a d-connected target arrangement.
  Instance apart(path_graph(5), {{0, 0}, {4, 4}}, 1, 2);
  TimeExpandedGraph ae = build_time_expanded(apart);
  CHECK_THROWS_WITH_AS(schedule_to_paths(ae, Schedule{{{0, 4}}}),
                       doctest::Contains("connected"), std::invalid_argument);
}

TEST_CASE("property checks accept real witnesses and flag tampering") {
  Instance inst(path_graph(4), {{0, 2}, {1, 3}}, 1, 3);
  TimeExpandedGraph te = build_time_expanded(inst);
  PathsWitness w = schedule_to_paths(te, *solve_bfs(inst).schedule);
  auto s = w.edge_set(te);
  auto x = w.layer_sets(te);
  REQUIRE(all_true(check_properties(te, s, x)));

  SUBCASE("dropping an S edge breaks a property") {
    auto s2 = s;
    s2.erase(s2.begin());
    CHECK(!all_true(check_properties(te, s2, x)));
  }
  SUBCASE("moving an X vertex out of its layer breaks property 1") {
    auto x2 = x;
    x2[1][0] = te.id_of(te.base_of(x2[1][0]), 2);
    auto p = check_properties(te, s, x2);
    CHECK(!p[0]);
  }
  SUBCASE("a communication label in S breaks property 2") {
    auto s2 = s;
    s2.push_back({te.id_of(0, 0), te.id_of(1, 0), TeLabel::kCommunication});
    std::sort(s2.begin(), s2.end());
    auto p = check_properties(te, s2, x);
    CHECK(!p[1]);
  }
  SUBCASE("an untouched vertex inside X breaks degree properties") {
    auto x2 = x;
    x2[0].push_back(te.id_of(3, 0));
    std::sort(x2[0].begin(), x2[0].end());
    auto p = check_properties(te, s, x2);
    CHECK(!p[3]);  // boundary vertex with degree 0
  }
  SUBCASE("an S edge outside X breaks property 5") {
    auto s2 = s;
    // copy edge between layers 2 and 3 on a vertex no path uses there
    s2.push_back({te.id_of(0, 2), te.id_of(0, 3), TeLabel::kCopy});
    std::sort(s2.begin(), s2.end());
    auto p = check_properties(te, s2, x);
    CHECK(!p[4]);
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(check_properties(te, s, std::vector<std::vector<int>>(2)),
                    std::invalid_argument);
    auto s2 = s;
    s2.push_back({te.id_of(0, 0), te.id_of(2, 0), TeLabel::kCommunication});
    CHECK_THROWS_AS(check_properties(te, s2, x), std::invalid_argument);
    auto x2 = x;
    x2[0].push_back(999);
    CHECK_THROWS_AS(check_properties(te, s, x2), std::invalid_argument);
  }
}

TEST_CASE("opposite crossings are caught structurally") {
  // Two agents pass the middle edge in opposite directions at different
  // turns; schedules allow that, witnesses must not.
  Instance inst(path_graph(2), {{0, 1}, {1, 0}}, 1, 1);
  TimeExpandedGraph te = build_time_expanded(inst);
  PathsWitness w{{{0, 1}, {1, 0}}};
  auto s = w.edge_set(te);
  auto x = w.layer_sets(te);
  auto p = check_properties(te, s, x);
  CHECK(!p[6]);
}

TEST_CASE("disconnected layer set is caught by property 8") {
  Instance inst(path_graph(5), {{1, 0}, {2, 3}}, 1, 1);
  TimeExpandedGraph te = build_time_expanded(inst);
  PathsWitness w{{{1, 0}, {2, 3}}};
  auto p = check_properties(te, w.edge_set(te), w.layer_sets(te));
  CHECK(p[6]);
  CHECK(!p[7]);
}

TEST_CASE("disjoint path search agrees with configuration search") {
  TestRng rng(909);
  int feasible_seen = 0;
  for (int round = 0; round < 250; ++round) {
    Instance inst = random_instance(rng, 6, 3, 4);
    SolveResult bfs = solve_bfs(inst);
    DisjointPathsResult dp = solve_disjoint_paths(inst);
    REQUIRE(dp.outcome == bfs.outcome);
    if (bfs.feasible()) {
      ++feasible_seen;
      REQUIRE(dp.schedule.has_value());
      CHECK(dp.schedule->makespan() == bfs.schedule->makespan());
      ValidationReport r = validate_schedule(inst, *dp.schedule);
      CHECK(r.ok());
      CHECK(r.within_budget);
      CHECK(mini_validate(inst, *dp.schedule).empty());
      REQUIRE(dp.witness.has_value());
      TimeExpandedGraph te = build_time_expanded(inst);
      Schedule full = paths_to_schedule(te, *dp.witness);
      CHECK(full.makespan() == inst.makespan_budget());
      CHECK(validate_schedule(inst, full).ok());
      CHECK(all_true(check_properties(te, dp.witness->edge_set(te),
                                      dp.witness->layer_sets(te))));
    } else {
      CHECK(!dp.schedule.has_value());
      CHECK(!dp.witness.has_value());
      CHECK(!dp.diagnostic.empty());
    }
  }
  CHECK(feasible_seen > 20);  // the sampler covers both outcomes
}

TEST_CASE("disjoint path search corner cases") {
  // Zero budget, arrangement already in place but not communicating: the
  // schedule exists while no witness can.
  Instance apart(Graph(4), {{0, 0}, {3, 3}}, 1, 0);
  DisjointPathsResult dp = solve_disjoint_paths(apart);
  CHECK(dp.feasible());
  REQUIRE(dp.schedule.has_value());
  CHECK(!dp.witness.has_value());
  CHECK(dp.diagnostic.find("witness") != std::string::npos);

  // Connected zero-budget arrangement carries a one-layer witness.
  Instance home(path_graph(2), {{0, 0}, {1, 1}}, 1, 0);
  DisjointPathsResult dp2 = solve_disjoint_paths(home);
  REQUIRE(dp2.witness.has_value());
  CHECK(dp2.witness->layers == std::vector<std::vector<int>>{{0}, {1}});

  // Node budgets are honored.
  Instance hard = frame_instance(1, 9);
  SolveOptions opts;
  opts.node_budget = 2;
  CHECK(solve_disjoint_paths(hard, opts).outcome == SolveOutcome::kBudgetExceeded);

  // Unreachable target short-circuits with a per-agent diagnostic.
  Instance blocked(path_graph(6), {{0, 5}}, 1, 2);
  DisjointPathsResult dp3 = solve_disjoint_paths(blocked);
  CHECK(dp3.outcome == SolveOutcome::kInfeasible);
  CHECK(dp3.diagnostic.find("agent 0") != std::string::npos);
}
