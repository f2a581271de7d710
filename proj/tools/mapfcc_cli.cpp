// Command-line front end; uses only the public C API of libmapfcc.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mapfcc.h"

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInputError = 3;
constexpr int kExitBenchMismatch = 4;

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitInputError);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) die("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) die("cannot open '" + path + "' for writing");
  file << text;
}

struct InstanceHandle {
  mapfcc_instance* ptr = nullptr;
  ~InstanceHandle() { mapfcc_instance_free(ptr); }
};

struct ScheduleHandle {
  mapfcc_schedule* ptr = nullptr;
  ~ScheduleHandle() { mapfcc_schedule_free(ptr); }
};

struct OwnedText {
  char* ptr = nullptr;
  ~OwnedText() { mapfcc_string_free(ptr); }
};

void parse_instance_or_die(const std::string& text, InstanceHandle& handle) {
  if (mapfcc_instance_parse(text.c_str(), &handle.ptr) != MAPFCC_OK)
    die(mapfcc_last_error());
}

int strategy_from_name(const std::string& name) {
  static const std::map<std::string, int> table = {
      {"auto", MAPFCC_STRATEGY_AUTO},     {"bfs", MAPFCC_STRATEGY_BFS},
      {"tree", MAPFCC_STRATEGY_TREE},     {"expanded", MAPFCC_STRATEGY_EXPANDED},
      {"local", MAPFCC_STRATEGY_LOCAL},   {"oracle", MAPFCC_STRATEGY_ORACLE},
  };
  auto it = table.find(name);
  if (it == table.end()) die("unknown strategy '" + name + "'");
  return it->second;
}

const char* outcome_name(int outcome) {
  switch (outcome) {
    case MAPFCC_FEASIBLE: return "feasible";
    case MAPFCC_INFEASIBLE: return "infeasible";
    case MAPFCC_BUDGET_EXCEEDED: return "budget-exceeded";
  }
  return "unknown";
}

int64_t default_node_budget() {
  const char* env = std::getenv("MAPFCC_NODE_BUDGET");
  if (!env || !*env) return 0;
  char* end = nullptr;
  long long value = std::strtoll(env, &end, 10);
  if (*end != '\0' || value < 0) die("MAPFCC_NODE_BUDGET must be a non-negative integer");
  return value;
}

std::vector<std::vector<int>> schedule_steps(const mapfcc_schedule* sched) {
  const int k = mapfcc_schedule_agent_count(sched);
  const int mu = mapfcc_schedule_makespan(sched);
  std::vector<std::vector<int>> steps(mu + 1, std::vector<int>(k));
  for (int i = 0; i <= mu; ++i)
    if (mapfcc_schedule_positions(sched, i, steps[i].data()) != MAPFCC_OK)
      die(mapfcc_last_error());
  return steps;
}

std::string dot_frames(const mapfcc_instance* inst, const mapfcc_schedule* sched) {
  const int n = mapfcc_instance_vertex_count(inst);
  const int m = mapfcc_instance_edge_count(inst);
  std::vector<int> us(m), vs(m);
  if (mapfcc_instance_edges(inst, us.data(), vs.data()) != MAPFCC_OK)
    die(mapfcc_last_error());
  auto steps = schedule_steps(sched);

  std::ostringstream out;
  for (size_t turn = 0; turn < steps.size(); ++turn) {
    std::vector<int> agent_at(n, -1);
    for (size_t a = 0; a < steps[turn].size(); ++a) agent_at[steps[turn][a]] = a;
    out << "graph frame" << turn << " {\n";
    out << "  label=\"turn " << turn << " of " << steps.size() - 1 << "\";\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < n; ++v) {
      out << "  v" << v << " [label=\"" << v;
      if (agent_at[v] >= 0) out << " (agent " << agent_at[v] << ")";
      out << "\"";
      if (agent_at[v] >= 0) out << ", style=filled";
      out << "];\n";
    }
    for (int e = 0; e < m; ++e) out << "  v" << us[e] << " -- v" << vs[e] << ";\n";
    out << "}\n";
  }
  return out.str();
}

int run_solve(const std::string& input, const std::string& strategy_name, int64_t budget,
              bool estimate, const std::string& format, const std::string& output) {
  InstanceHandle inst;
  parse_instance_or_die(read_input(input), inst);
  int strategy = strategy_from_name(strategy_name);

  int outcome = -1;
  ScheduleHandle sched;
  mapfcc_solve_stats stats{};
  auto begin = std::chrono::steady_clock::now();
  mapfcc_status status = mapfcc_solve(inst.ptr, strategy, budget, estimate ? 1 : 0, &outcome,
                                      &sched.ptr, &stats);
  auto elapsed = std::chrono::steady_clock::now() - begin;
  if (status != MAPFCC_OK) die(mapfcc_last_error());

  std::cerr << "time-ms "
            << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << "\n";
  std::cerr << "strategy " << mapfcc_strategy_name(stats.strategy_used) << " expanded "
            << stats.expanded_nodes << " generated " << stats.generated_nodes
            << " max-frontier " << stats.max_frontier << "\n";
  if (outcome != MAPFCC_FEASIBLE && *mapfcc_last_diagnostic())
    std::cerr << "diagnostic: " << mapfcc_last_diagnostic() << "\n";

  std::string text;
  if (format == "plan") {
    if (sched.ptr) {
      OwnedText plan;
      if (mapfcc_schedule_print(sched.ptr, &plan.ptr) != MAPFCC_OK)
        die(mapfcc_last_error());
      text = plan.ptr;
    }
  } else if (format == "json-lines") {
    std::ostringstream lines;
    if (sched.ptr) {
      auto steps = schedule_steps(sched.ptr);
      for (size_t turn = 0; turn < steps.size(); ++turn) {
        nlohmann::ordered_json record;
        record["type"] = "turn";
        record["turn"] = turn;
        record["positions"] = steps[turn];
        lines << record.dump() << "\n";
      }
    }
    nlohmann::ordered_json record;
    record["type"] = "result";
    record["outcome"] = outcome_name(outcome);
    record["makespan"] = sched.ptr ? mapfcc_schedule_makespan(sched.ptr) : -1;
    record["strategy"] = mapfcc_strategy_name(stats.strategy_used);
    record["expanded_nodes"] = stats.expanded_nodes;
    record["generated_nodes"] = stats.generated_nodes;
    record["max_frontier"] = stats.max_frontier;
    record["connected_set_estimate"] = stats.connected_set_estimate;
    record["diagnostic"] = outcome == MAPFCC_FEASIBLE ? "" : mapfcc_last_diagnostic();
    lines << record.dump() << "\n";
    text = lines.str();
  } else if (format == "dot-frames") {
    if (sched.ptr) text = dot_frames(inst.ptr, sched.ptr);
  } else {
    die("unknown format '" + format + "'");
  }
  write_output(output, text);

  if (outcome == MAPFCC_FEASIBLE) return kExitFeasible;
  if (outcome == MAPFCC_INFEASIBLE) return kExitInfeasible;
  return kExitBudget;
}

int run_validate(const std::string& instance_path, const std::string& plan_path) {
  InstanceHandle inst;
  parse_instance_or_die(read_input(instance_path), inst);
  ScheduleHandle sched;
  if (mapfcc_schedule_parse(read_input(plan_path).c_str(), &sched.ptr) != MAPFCC_OK)
    die(mapfcc_last_error());

  mapfcc_validation* report = nullptr;
  if (mapfcc_validate(inst.ptr, sched.ptr, &report) != MAPFCC_OK) die(mapfcc_last_error());

  std::ostringstream out;
  out << "within-budget " << (mapfcc_validation_within_budget(report) ? "yes" : "no") << "\n";
  out << "start-connected " << (mapfcc_validation_start_connected(report) ? "yes" : "no")
      << "\n";
  const int count = mapfcc_validation_violation_count(report);
  out << "violations " << count << "\n";
  for (int i = 0; i < count; ++i) {
    int turn = -1, agent_a = -1, agent_b = -1;
    const char* kind = nullptr;
    OwnedText detail;
    if (mapfcc_validation_violation(report, i, &turn, &kind, &agent_a, &agent_b,
                                    &detail.ptr) != MAPFCC_OK)
      die(mapfcc_last_error());
    out << "violation turn=" << turn << " kind=" << kind << " agent=" << agent_a
        << " other=" << agent_b << " detail=\"" << detail.ptr << "\"\n";
  }
  const bool ok = mapfcc_validation_ok(report) != 0;
  const bool within = mapfcc_validation_within_budget(report) != 0;
  out << "result " << (ok && within ? "ok" : "invalid") << "\n";
  mapfcc_validation_free(report);
  std::cout << out.str();
  return ok && within ? 0 : 1;
}

int run_reduce(const std::string& input, const std::string& output) {
  mapfcc_mcc* mcc = nullptr;
  if (mapfcc_mcc_parse(read_input(input).c_str(), &mcc) != MAPFCC_OK)
    die(mapfcc_last_error());
  InstanceHandle inst;
  mapfcc_status status = mapfcc_reduce_mcc(mcc, &inst.ptr);
  mapfcc_mcc_free(mcc);
  if (status != MAPFCC_OK) die(mapfcc_last_error());
  OwnedText text;
  if (mapfcc_instance_print(inst.ptr, &text.ptr) != MAPFCC_OK) die(mapfcc_last_error());
  write_output(output, text.ptr);
  return 0;
}

int run_expand(const std::string& input, const std::string& output) {
  InstanceHandle inst;
  parse_instance_or_die(read_input(input), inst);
  OwnedText text;
  if (mapfcc_emit_mso(inst.ptr, &text.ptr) != MAPFCC_OK) die(mapfcc_last_error());
  write_output(output, text.ptr);
  return 0;
}

int run_count_sets(const std::string& input, int vertex, int size) {
  InstanceHandle inst;
  parse_instance_or_die(read_input(input), inst);
  if (size <= 0) size = mapfcc_instance_agent_count(inst.ptr);
  uint64_t total = 0;
  if (vertex >= 0) {
    if (mapfcc_count_connected_sets(inst.ptr, vertex, size, &total) != MAPFCC_OK)
      die(mapfcc_last_error());
  } else {
    const int n = mapfcc_instance_vertex_count(inst.ptr);
    for (int v = 0; v < n; ++v) {
      uint64_t count = 0;
      if (mapfcc_count_connected_sets(inst.ptr, v, size, &count) != MAPFCC_OK)
        die(mapfcc_last_error());
      total += count;
    }
    total /= static_cast<uint64_t>(size);  // each set counted once per member
  }
  std::cout << total << "\n";
  return 0;
}

// Deterministic pseudo-random instance stream for differential benching.
struct BenchRng {
  uint64_t state;
  explicit BenchRng(uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int bound) { return static_cast<int>(next() % static_cast<uint64_t>(bound)); }
};

std::string random_instance_text(BenchRng& rng, int max_n) {
  const int n = 2 + rng.below(max_n - 1);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(5) < 2) edges.push_back({u, v});
  const int k = 1 + rng.below(std::min(3, n));
  auto sample_distinct = [&](int count) {
    std::vector<int> pool(n);
    for (int v = 0; v < n; ++v) pool[v] = v;
    std::vector<int> out;
    for (int i = 0; i < count; ++i) {
      int at = rng.below(static_cast<int>(pool.size()));
      out.push_back(pool[at]);
      pool.erase(pool.begin() + at);
    }
    return out;
  };
  auto starts = sample_distinct(k);
  auto targets = sample_distinct(k);
  const int d = 1 + rng.below(2);
  const int ell = rng.below(5);

  std::ostringstream out;
  out << "mapfcc 1\n";
  out << "graph " << n << " " << edges.size() << "\n";
  for (const auto& [u, v] : edges) out << u << " " << v << "\n";
  out << "agents " << k << "\n";
  for (int a = 0; a < k; ++a) out << starts[a] << " " << targets[a] << "\n";
  out << "d " << d << "\n";
  out << "ell " << ell << "\n";
  return out.str();
}

int run_bench(uint64_t seed, int count, int max_n, const std::string& strategies_csv,
              int64_t budget, const std::string& repro_path) {
  std::vector<std::string> names;
  std::stringstream split(strategies_csv);
  std::string item;
  while (std::getline(split, item, ','))
    if (!item.empty()) names.push_back(item);
  if (names.size() < 2) die("bench needs at least two strategies");
  std::vector<int> strategies;
  for (const auto& name : names) strategies.push_back(strategy_from_name(name));

  std::cout << "index,n,m,k,d,ell";
  for (const auto& name : names) std::cout << "," << name << "_outcome," << name << "_makespan";
  std::cout << ",agree\n";

  bool mismatch = false;
  std::string first_mismatch_text;
  int first_mismatch_index = -1;

  for (int index = 0; index < count; ++index) {
    BenchRng rng(seed * 1000003ULL + static_cast<uint64_t>(index));
    std::string text = random_instance_text(rng, max_n);
    InstanceHandle inst;
    parse_instance_or_die(text, inst);

    std::cout << index << "," << mapfcc_instance_vertex_count(inst.ptr) << ","
              << mapfcc_instance_edge_count(inst.ptr) << ","
              << mapfcc_instance_agent_count(inst.ptr) << ","
              << mapfcc_instance_range(inst.ptr) << ","
              << mapfcc_instance_makespan_budget(inst.ptr);

    // Compare decisions and makespans across strategies that completed.
    int agreed_outcome = -1, agreed_makespan = -2;
    bool row_agrees = true;
    for (int s : strategies) {
      int outcome = -1;
      ScheduleHandle sched;
      mapfcc_status status =
          mapfcc_solve(inst.ptr, s, budget, 0, &outcome, &sched.ptr, nullptr);
      if (status != MAPFCC_OK) {
        std::cout << ",error,-1";
        continue;
      }
      int makespan = sched.ptr ? mapfcc_schedule_makespan(sched.ptr) : -1;
      std::cout << "," << outcome_name(outcome) << "," << makespan;
      if (outcome == MAPFCC_BUDGET_EXCEEDED) continue;
      if (agreed_outcome == -1 && agreed_makespan == -2) {
        agreed_outcome = outcome;
        agreed_makespan = makespan;
      } else if (outcome != agreed_outcome || makespan != agreed_makespan) {
        row_agrees = false;
      }
    }
    std::cout << "," << (row_agrees ? "yes" : "no") << "\n";
    if (!row_agrees && !mismatch) {
      mismatch = true;
      first_mismatch_index = index;
      first_mismatch_text = text;
    }
  }

  if (mismatch) {
    std::ofstream repro(repro_path, std::ios::binary);
    if (repro) {
      repro << "# bench mismatch at index " << first_mismatch_index << " (seed " << seed
            << ", strategies " << strategies_csv << ")\n";
      repro << first_mismatch_text;
    }
    std::cerr << "bench: strategies disagree at index " << first_mismatch_index
              << "; repro written to " << repro_path << "\n";
    return kExitBenchMismatch;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for multiagent path finding with communication constraints"};
  app.set_version_flag("--version", std::string(mapfcc_version()));
  app.require_subcommand(1);

  std::string input = "-";
  std::string output = "-";
  std::string strategy = "auto";
  std::string format = "plan";
  int64_t budget = default_node_budget();
  bool estimate = false;

  auto* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("instance", input, "instance file ('-' for stdin)");
  solve->add_option("--strategy", strategy, "auto|bfs|tree|expanded|local|oracle");
  solve->add_option("--budget", budget, "node expansion budget (0 = unlimited)");
  solve->add_flag("--estimate-connected-sets", estimate,
                  "count candidate occupied arrangements first");
  solve->add_option("--format", format, "plan|json-lines|dot-frames");
  solve->add_option("--output,-o", output, "output file ('-' for stdout)");

  std::string plan_path;
  auto* validate = app.add_subcommand("validate", "check a plan against an instance");
  validate->add_option("instance", input, "instance file")->required();
  validate->add_option("plan", plan_path, "plan file")->required();

  auto* reduce = app.add_subcommand("reduce", "turn a multicolored-clique input into an instance");
  reduce->add_option("mcc", input, "mcc file ('-' for stdin)");
  reduce->add_option("--output,-o", output, "output file");

  auto* expand = app.add_subcommand("expand", "emit the labelled time-expanded structure");
  expand->add_option("instance", input, "instance file ('-' for stdin)");
  expand->add_option("--output,-o", output, "output file");

  int cs_vertex = -1, cs_size = 0;
  auto* count_sets = app.add_subcommand("count-sets", "count connected vertex sets");
  count_sets->add_option("instance", input, "instance file ('-' for stdin)");
  count_sets->add_option("--vertex", cs_vertex, "count only sets containing this vertex");
  count_sets->add_option("--size", cs_size, "set size (default: agent count)");

  uint64_t bench_seed = 1;
  int bench_count = 100, bench_max_n = 7;
  std::string bench_strategies = "bfs,expanded,oracle";
  std::string bench_repro = "mapfcc-bench-repro.txt";
  auto* bench = app.add_subcommand("bench", "differential test of solver strategies");
  bench->add_option("--seed", bench_seed, "stream seed");
  bench->add_option("--count", bench_count, "number of generated instances");
  bench->add_option("--max-n", bench_max_n, "largest vertex count");
  bench->add_option("--strategies", bench_strategies, "comma-separated strategy list");
  bench->add_option("--budget", budget, "node expansion budget per solve");
  bench->add_option("--repro", bench_repro, "file for the first mismatching instance");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) return run_solve(input, strategy, budget, estimate, format, output);
  if (validate->parsed()) return run_validate(input, plan_path);
  if (reduce->parsed()) return run_reduce(input, output);
  if (expand->parsed()) return run_expand(input, output);
  if (count_sets->parsed()) return run_count_sets(input, cs_vertex, cs_size);
  if (bench->parsed())
    return run_bench(bench_seed, bench_count, bench_max_n, bench_strategies, budget,
                     bench_repro);
  return kExitInputError;
}
