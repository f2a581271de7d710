#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "mapfcc.h"

namespace {

const char* kPathInstance =
    "mapfcc 1\n"
    "graph 4 3\n"
    "0 1\n1 2\n2 3\n"
    "agents 2\n"
    "0 2\n1 3\n"
    "d 1\n"
    "ell 4\n";

mapfcc_instance* parse_ok(const char* text) {
  mapfcc_instance* inst = nullptr;
  REQUIRE(mapfcc_instance_parse(text, &inst) == MAPFCC_OK);
  REQUIRE(inst != nullptr);
  return inst;
}

}  // namespace

TEST_CASE("version and enum strings") {
  CHECK(std::string(mapfcc_version()) == "0.1.0");
  CHECK(std::string(mapfcc_status_string(MAPFCC_OK)) == "ok");
  CHECK(std::string(mapfcc_status_string(MAPFCC_ERROR_PARSE)) == "parse error");
  CHECK(std::string(mapfcc_strategy_name(MAPFCC_STRATEGY_AUTO)) == "auto");
  CHECK(std::string(mapfcc_strategy_name(MAPFCC_STRATEGY_ORACLE)) == "oracle");
  CHECK(std::string(mapfcc_strategy_name(99)) == "unknown");
}

TEST_CASE("instance lifecycle and accessors") {
  mapfcc_instance* inst = parse_ok(kPathInstance);
  CHECK(mapfcc_instance_vertex_count(inst) == 4);
  CHECK(mapfcc_instance_edge_count(inst) == 3);
  CHECK(mapfcc_instance_agent_count(inst) == 2);
  CHECK(mapfcc_instance_range(inst) == 1);
  CHECK(mapfcc_instance_makespan_budget(inst) == 4);
  CHECK(mapfcc_instance_is_tree(inst) == 1);

  int start = -1, target = -1;
  CHECK(mapfcc_instance_agent(inst, 1, &start, &target) == MAPFCC_OK);
  CHECK(start == 1);
  CHECK(target == 3);
  CHECK(mapfcc_instance_agent(inst, 5, &start, &target) == MAPFCC_ERROR_INVALID_ARGUMENT);

  std::vector<int> us(3), vs(3);
  CHECK(mapfcc_instance_edges(inst, us.data(), vs.data()) == MAPFCC_OK);
  CHECK(us == std::vector<int>{0, 1, 2});
  CHECK(vs == std::vector<int>{1, 2, 3});

  char* text = nullptr;
  REQUIRE(mapfcc_instance_print(inst, &text) == MAPFCC_OK);
  mapfcc_instance* again = parse_ok(text);
  char* text2 = nullptr;
  REQUIRE(mapfcc_instance_print(again, &text2) == MAPFCC_OK);
  CHECK(std::string(text) == text2);
  mapfcc_string_free(text);
  mapfcc_string_free(text2);
  mapfcc_instance_free(again);
  mapfcc_instance_free(inst);
}

TEST_CASE("parse failures report line numbers") {
  mapfcc_instance* inst = nullptr;
  CHECK(mapfcc_instance_parse("mapfcc 1\ngraph 2 1\n0 0\n", &inst) == MAPFCC_ERROR_PARSE);
  CHECK(inst == nullptr);
  CHECK(std::string(mapfcc_last_error()).find("line 3") != std::string::npos);
  CHECK(mapfcc_instance_parse(nullptr, &inst) == MAPFCC_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("solving through every strategy") {
  mapfcc_instance* inst = parse_ok(kPathInstance);
  for (int strategy : {MAPFCC_STRATEGY_AUTO, MAPFCC_STRATEGY_BFS, MAPFCC_STRATEGY_TREE,
                       MAPFCC_STRATEGY_EXPANDED, MAPFCC_STRATEGY_LOCAL,
                       MAPFCC_STRATEGY_ORACLE}) {
    int outcome = -1;
    mapfcc_schedule* sched = nullptr;
    mapfcc_solve_stats stats{};
    REQUIRE(mapfcc_solve(inst, strategy, 0, 1, &outcome, &sched, &stats) == MAPFCC_OK);
    CHECK(outcome == MAPFCC_FEASIBLE);
    REQUIRE(sched != nullptr);
    CHECK(mapfcc_schedule_agent_count(sched) == 2);
    CHECK(mapfcc_schedule_makespan(sched) == 2);
    CHECK(stats.expanded_nodes >= 1);
    CHECK(stats.connected_set_estimate == 3);  // three adjacent pairs on a path of 4
    if (strategy == MAPFCC_STRATEGY_AUTO)
      CHECK(stats.strategy_used == MAPFCC_STRATEGY_TREE);
    else
      CHECK(stats.strategy_used == strategy);

    std::vector<int> pos(2);
    CHECK(mapfcc_schedule_positions(sched, 0, pos.data()) == MAPFCC_OK);
    CHECK(pos == std::vector<int>{0, 1});
    CHECK(mapfcc_schedule_positions(sched, 2, pos.data()) == MAPFCC_OK);
    CHECK(pos == std::vector<int>{2, 3});
    CHECK(mapfcc_schedule_positions(sched, 9, pos.data()) == MAPFCC_ERROR_INVALID_ARGUMENT);

    mapfcc_validation* report = nullptr;
    REQUIRE(mapfcc_validate(inst, sched, &report) == MAPFCC_OK);
    CHECK(mapfcc_validation_ok(report) == 1);
    CHECK(mapfcc_validation_within_budget(report) == 1);
    CHECK(mapfcc_validation_start_connected(report) == 1);
    CHECK(mapfcc_validation_violation_count(report) == 0);
    mapfcc_validation_free(report);
    mapfcc_schedule_free(sched);
  }
  mapfcc_instance_free(inst);
}

TEST_CASE("infeasible outcomes leave a diagnostic") {
  const char* blocked =
      "mapfcc 1\ngraph 4 3\n0 1\n1 2\n2 3\nagents 2\n0 3\n1 2\nd 1\nell 6\n";
  mapfcc_instance* inst = parse_ok(blocked);
  int outcome = -1;
  mapfcc_schedule* sched = reinterpret_cast<mapfcc_schedule*>(&outcome);  // must be reset
  mapfcc_solve_stats stats{};
  REQUIRE(mapfcc_solve(inst, MAPFCC_STRATEGY_BFS, 0, 0, &outcome, &sched, &stats) == MAPFCC_OK);
  CHECK(outcome == MAPFCC_INFEASIBLE);
  CHECK(sched == nullptr);
  CHECK(std::string(mapfcc_last_diagnostic()).size() > 0);
  CHECK(stats.connected_set_estimate == -1);
  mapfcc_instance_free(inst);
}

TEST_CASE("budget exhaustion surfaces as an outcome") {
  mapfcc_instance* inst = parse_ok(kPathInstance);
  int outcome = -1;
  mapfcc_schedule* sched = nullptr;
  REQUIRE(mapfcc_solve(inst, MAPFCC_STRATEGY_BFS, 1, 0, &outcome, &sched, nullptr) == MAPFCC_OK);
  CHECK(outcome == MAPFCC_BUDGET_EXCEEDED);
  CHECK(sched == nullptr);
  CHECK(std::string(mapfcc_last_diagnostic()).find("budget") != std::string::npos);
  mapfcc_instance_free(inst);
}

TEST_CASE("schedule text round trip") {
  const char* plan = "mapfccplan 1\nagents 2\nmakespan 2\n0 1\n1 2\n2 3\n";
  mapfcc_schedule* sched = nullptr;
  REQUIRE(mapfcc_schedule_parse(plan, &sched) == MAPFCC_OK);
  CHECK(mapfcc_schedule_agent_count(sched) == 2);
  CHECK(mapfcc_schedule_makespan(sched) == 2);
  char* out = nullptr;
  REQUIRE(mapfcc_schedule_print(sched, &out) == MAPFCC_OK);
  mapfcc_schedule* again = nullptr;
  REQUIRE(mapfcc_schedule_parse(out, &again) == MAPFCC_OK);
  char* out2 = nullptr;
  REQUIRE(mapfcc_schedule_print(again, &out2) == MAPFCC_OK);
  CHECK(std::string(out) == out2);
  mapfcc_string_free(out);
  mapfcc_string_free(out2);
  mapfcc_schedule_free(sched);
  mapfcc_schedule_free(again);

  mapfcc_schedule* bad = nullptr;
  CHECK(mapfcc_schedule_parse("mapfccplan 2\n", &bad) == MAPFCC_ERROR_PARSE);
  CHECK(bad == nullptr);
}

TEST_CASE("validation reports violations with details") {
  mapfcc_instance* inst = parse_ok(kPathInstance);
  mapfcc_schedule* sched = nullptr;
  // wrong start for agent 0 and a teleport later
  REQUIRE(mapfcc_schedule_parse("mapfccplan 1\nagents 2\nmakespan 1\n1 0\n2 3\n", &sched) ==
          MAPFCC_OK);
  mapfcc_validation* report = nullptr;
  REQUIRE(mapfcc_validate(inst, sched, &report) == MAPFCC_OK);
  CHECK(mapfcc_validation_ok(report) == 0);
  int count = mapfcc_validation_violation_count(report);
  CHECK(count >= 2);
  bool saw_wrong_start = false;
  for (int i = 0; i < count; ++i) {
    int turn = -2, a = -2, b = -2;
    const char* kind = nullptr;
    char* detail = nullptr;
    REQUIRE(mapfcc_validation_violation(report, i, &turn, &kind, &a, &b, &detail) == MAPFCC_OK);
    REQUIRE(kind != nullptr);
    REQUIRE(detail != nullptr);
    if (std::string(kind) == "WrongStart") {
      saw_wrong_start = true;
      CHECK(turn == 0);
      CHECK(std::string(detail).find("agent") != std::string::npos);
    }
    mapfcc_string_free(detail);
  }
  CHECK(saw_wrong_start);
  CHECK(mapfcc_validation_violation(report, count, nullptr, nullptr, nullptr, nullptr,
                                    nullptr) == MAPFCC_ERROR_INVALID_ARGUMENT);
  mapfcc_validation_free(report);
  mapfcc_schedule_free(sched);
  mapfcc_instance_free(inst);
}

TEST_CASE("clique reduction through the C layer") {
  const char* text =
      "mcc 3\nclass 0 1\nclass 2 3\nclass 4 5\nedge 0 2\nedge 0 4\nedge 2 4\n";
  mapfcc_mcc* mcc = nullptr;
  REQUIRE(mapfcc_mcc_parse(text, &mcc) == MAPFCC_OK);
  mapfcc_instance* inst = nullptr;
  REQUIRE(mapfcc_reduce_mcc(mcc, &inst) == MAPFCC_OK);
  CHECK(mapfcc_instance_range(inst) == 1);
  CHECK(mapfcc_instance_makespan_budget(inst) == 3);
  CHECK(mapfcc_instance_agent_count(inst) == 6);
  int outcome = -1;
  mapfcc_schedule* sched = nullptr;
  REQUIRE(mapfcc_solve(inst, MAPFCC_STRATEGY_BFS, 0, 0, &outcome, &sched, nullptr) == MAPFCC_OK);
  CHECK(outcome == MAPFCC_FEASIBLE);
  CHECK(mapfcc_schedule_makespan(sched) == 3);
  mapfcc_schedule_free(sched);
  mapfcc_instance_free(inst);
  mapfcc_mcc_free(mcc);

  mapfcc_mcc* bad = nullptr;
  CHECK(mapfcc_mcc_parse("mcc 1\nclass 0 1\nedge 0 1\n", &bad) == MAPFCC_ERROR_PARSE);
  CHECK(bad == nullptr);
}

TEST_CASE("structure emission and set counting") {
  mapfcc_instance* inst = parse_ok(kPathInstance);
  char* mso = nullptr;
  REQUIRE(mapfcc_emit_mso(inst, &mso) == MAPFCC_OK);
  std::string text(mso);
  CHECK(text.find("msogi 1\n") == 0);
  CHECK(text.find("instance n=4 m=3 k=2 d=1 ell=4") != std::string::npos);
  char* mso2 = nullptr;
  REQUIRE(mapfcc_emit_mso(inst, &mso2) == MAPFCC_OK);
  CHECK(text == mso2);
  mapfcc_string_free(mso);
  mapfcc_string_free(mso2);

  uint64_t count = 0;
  REQUIRE(mapfcc_count_connected_sets(inst, 0, 2, &count) == MAPFCC_OK);
  CHECK(count == 1);  // only {0,1}
  REQUIRE(mapfcc_count_connected_sets(inst, 1, 2, &count) == MAPFCC_OK);
  CHECK(count == 2);
  CHECK(mapfcc_count_connected_sets(inst, 9, 2, &count) == MAPFCC_ERROR_INVALID_ARGUMENT);
  mapfcc_instance_free(inst);
}

TEST_CASE("null handles are rejected uniformly") {
  CHECK(mapfcc_instance_vertex_count(nullptr) == -1);
  CHECK(mapfcc_instance_agent_count(nullptr) == -1);
  CHECK(mapfcc_instance_is_tree(nullptr) == 0);
  CHECK(mapfcc_schedule_agent_count(nullptr) == -1);
  CHECK(mapfcc_instance_print(nullptr, nullptr) == MAPFCC_ERROR_INVALID_ARGUMENT);
  int outcome;
  CHECK(mapfcc_solve(nullptr, MAPFCC_STRATEGY_BFS, 0, 0, &outcome, nullptr, nullptr) ==
        MAPFCC_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(mapfcc_last_error()).size() > 0);
  mapfcc_instance_free(nullptr);   // must be safe
  mapfcc_schedule_free(nullptr);
  mapfcc_validation_free(nullptr);
  mapfcc_mcc_free(nullptr);
  mapfcc_string_free(nullptr);
}

TEST_CASE("auto strategy picks locality on far-flung graphs") {
  // Path of 60 with a tight gang near the left end: ball radius k*d+ell = 6
  // reaches far fewer than 60 vertices, and the graph is a tree; tree wins.
  std::string text = "mapfcc 1\ngraph 60 59\n";
  for (int v = 0; v + 1 < 60; ++v) text += std::to_string(v) + " " + std::to_string(v + 1) + "\n";
  text += "agents 2\n0 2\n1 3\nd 1\nell 4\n";
  mapfcc_instance* tree_inst = parse_ok(text.c_str());
  mapfcc_solve_stats stats{};
  int outcome = -1;
  mapfcc_schedule* sched = nullptr;
  REQUIRE(mapfcc_solve(tree_inst, MAPFCC_STRATEGY_AUTO, 0, 0, &outcome, &sched, &stats) ==
          MAPFCC_OK);
  CHECK(stats.strategy_used == MAPFCC_STRATEGY_TREE);
  mapfcc_schedule_free(sched);
  mapfcc_instance_free(tree_inst);

  // Same shape plus one chord: no longer a tree, so locality is chosen.
  std::string chord = "mapfcc 1\ngraph 60 60\n";
  for (int v = 0; v + 1 < 60; ++v)
    chord += std::to_string(v) + " " + std::to_string(v + 1) + "\n";
  chord += "40 59\nagents 2\n0 2\n1 3\nd 1\nell 4\n";
  mapfcc_instance* loop_inst = parse_ok(chord.c_str());
  REQUIRE(mapfcc_solve(loop_inst, MAPFCC_STRATEGY_AUTO, 0, 0, &outcome, &sched, &stats) ==
          MAPFCC_OK);
  CHECK(outcome == MAPFCC_FEASIBLE);
  CHECK(stats.strategy_used == MAPFCC_STRATEGY_LOCAL);
  mapfcc_schedule_free(sched);
  mapfcc_instance_free(loop_inst);
}
