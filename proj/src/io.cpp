#include "mapfcc/io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mapfcc {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Token {
  std::string text;
  int line;
};

// Whitespace-separated tokens with 1-based line numbers; '#' comments run to
// the end of the line.
std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1;
  std::string current;
  bool in_comment = false;
  auto flush = [&]() {
    if (!current.empty()) {
      tokens.push_back({current, line});
      current.clear();
    }
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      in_comment = false;
      ++line;
      continue;
    }
    if (in_comment) continue;
    if (c == '#') {
      flush();
      in_comment = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
      flush();
      continue;
    }
    current.push_back(c);
  }
  flush();
  return tokens;
}

class Reader {
 public:
  explicit Reader(const std::string& text) : tokens_(tokenize(text)) {}

  bool at_end() const { return next_ >= tokens_.size(); }
  int line() const {
    if (next_ < tokens_.size()) return tokens_[next_].line;
    return tokens_.empty() ? 1 : tokens_.back().line;
  }
  const std::string* peek() const { return at_end() ? nullptr : &tokens_[next_].text; }

  std::string take(const std::string& what) {
    if (at_end()) throw ParseError(line(), "unexpected end of input, expected " + what);
    return tokens_[next_++].text;
  }

  void expect(const std::string& word) {
    int at = line();
    std::string got = take("'" + word + "'");
    if (got != word) throw ParseError(at, "expected '" + word + "', got '" + got + "'");
  }

  int take_int(const std::string& what, long long lo, long long hi) {
    int at = line();
    std::string text = take(what);
    long long value = 0;
    size_t used = 0;
    try {
      value = std::stoll(text, &used);
    } catch (const std::exception&) {
      throw ParseError(at, "expected integer " + what + ", got '" + text + "'");
    }
    if (used != text.size())
      throw ParseError(at, "expected integer " + what + ", got '" + text + "'");
    if (value < lo || value > hi)
      throw ParseError(at, what + " out of range: " + text);
    return static_cast<int>(value);
  }

  void expect_end() {
    if (!at_end())
      throw ParseError(line(), "unexpected trailing input: '" + tokens_[next_].text + "'");
  }

 private:
  std::vector<Token> tokens_;
  size_t next_ = 0;
};

bool is_integer_token(const std::string& text) {
  if (text.empty()) return false;
  size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) return false;
  return std::all_of(text.begin() + start, text.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

constexpr long long kMaxCount = std::numeric_limits<int>::max();

}  // namespace

Instance parse_instance(const std::string& text) {
  Reader in(text);
  in.expect("mapfcc");
  in.expect("1");

  Graph g;
  int header_line = in.line();
  std::string kind = in.take("'graph' or 'grid'");
  if (kind == "graph") {
    int n = in.take_int("vertex count", 0, kMaxCount);
    int m = in.take_int("edge count", 0, kMaxCount);
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < m; ++e) {
      int at = in.line();
      int u = in.take_int("edge endpoint", 0, n - 1);
      int v = in.take_int("edge endpoint", 0, n - 1);
      if (u == v) throw ParseError(at, "self-loop edge");
      auto key = std::minmax(u, v);
      if (!seen.insert(key).second) throw ParseError(at, "duplicate edge");
      edges.push_back({u, v});
    }
    g = Graph::from_edges(n, edges);
  } else if (kind == "grid") {
    int w = in.take_int("grid width", 1, 1 << 15);
    int h = in.take_int("grid height", 1, 1 << 15);
    g = grid_graph(w, h);
  } else {
    throw ParseError(header_line, "expected 'graph' or 'grid', got '" + kind + "'");
  }

  in.expect("agents");
  int k = in.take_int("agent count", 1, kMaxCount);
  std::vector<Agent> agents;
  std::set<int> starts, targets;
  for (int a = 0; a < k; ++a) {
    int at = in.line();
    int s = in.take_int("agent start", 0, g.vertex_count() - 1);
    int t = in.take_int("agent target", 0, g.vertex_count() - 1);
    if (!starts.insert(s).second) throw ParseError(at, "duplicate agent start");
    if (!targets.insert(t).second) throw ParseError(at, "duplicate agent target");
    agents.push_back({s, t});
  }

  in.expect("d");
  int d = in.take_int("communication range", 1, kMaxCount);
  in.expect("ell");
  int ell = in.take_int("makespan budget", 0, kMaxCount);
  in.expect_end();
  return Instance(g, agents, d, ell);
}

std::string print_instance(const Instance& inst) {
  std::ostringstream out;
  const Graph& g = inst.graph();
  out << "mapfcc 1\n";
  out << "graph " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  out << "agents " << inst.agent_count() << "\n";
  for (const Agent& a : inst.agents()) out << a.start << " " << a.target << "\n";
  out << "d " << inst.range() << "\n";
  out << "ell " << inst.makespan_budget() << "\n";
  return out.str();
}

Schedule parse_plan(const std::string& text) {
  Reader in(text);
  in.expect("mapfccplan");
  in.expect("1");
  in.expect("agents");
  int k = in.take_int("agent count", 1, kMaxCount);
  in.expect("makespan");
  int mu = in.take_int("makespan", 0, kMaxCount);
  Schedule sched;
  sched.steps.assign(mu + 1, Config(k));
  for (int i = 0; i <= mu; ++i)
    for (int a = 0; a < k; ++a)
      sched.steps[i][a] = in.take_int("vertex id", 0, kMaxCount);
  in.expect_end();
  return sched;
}

std::string print_plan(const Schedule& sched) {
  std::ostringstream out;
  out << "mapfccplan 1\n";
  out << "agents " << (sched.steps.empty() ? 0 : sched.steps[0].size()) << "\n";
  out << "makespan " << sched.makespan() << "\n";
  for (const Config& config : sched.steps) {
    for (size_t a = 0; a < config.size(); ++a) out << (a ? " " : "") << config[a];
    out << "\n";
  }
  return out.str();
}

MccInstance parse_mcc(const std::string& text) {
  Reader in(text);
  in.expect("mcc");
  int k = in.take_int("class count", 1, kMaxCount);
  std::vector<std::vector<int>> classes(k);
  int max_id = -1;
  for (int i = 0; i < k; ++i) {
    in.expect("class");
    while (!in.at_end() && is_integer_token(*in.peek())) {
      int v = in.take_int("class member", 0, kMaxCount);
      classes[i].push_back(v);
      max_id = std::max(max_id, v);
    }
  }
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  while (!in.at_end()) {
    int at = in.line();
    in.expect("edge");
    int u = in.take_int("edge endpoint", 0, max_id);
    int v = in.take_int("edge endpoint", 0, max_id);
    if (u == v) throw ParseError(at, "self-loop edge");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw ParseError(at, "duplicate edge");
    edges.push_back({u, v});
  }
  try {
    return MccInstance::from_parts(Graph::from_edges(max_id + 1, edges), classes);
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, e.what());
  }
}

std::string print_mcc(const MccInstance& mcc) {
  std::ostringstream out;
  out << "mcc " << mcc.class_count() << "\n";
  for (const auto& members : mcc.classes()) {
    out << "class";
    for (int v : members) out << " " << v;
    out << "\n";
  }
  for (const auto& [u, v] : mcc.h().edges()) out << "edge " << u << " " << v << "\n";
  return out.str();
}

}  // namespace mapfcc
