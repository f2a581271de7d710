#include "mapfcc/mso.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mapfcc {

namespace {

// The evaluator realizes each conjunct by direct quantifier loops over the
// incidence structure, with membership and degree atoms computed by scanning
// S. Kept deliberately independent of the indexed machinery behind
// check_properties; the two must agree on every input.
struct Valuation {
  const TimeExpandedGraph& te;
  std::vector<TeEdge> s;                   // sorted, deduplicated
  std::vector<std::vector<char>> x;        // x[i][id]
  int d;

  Valuation(const TimeExpandedGraph& graph, const std::vector<TeEdge>& s_edges,
            const std::vector<std::vector<int>>& x_sets, int range)
      : te(graph), d(range) {
    const int ell = te.ell();
    if (static_cast<int>(x_sets.size()) != ell + 1)
      throw std::invalid_argument("evaluate_formula: expected one X set per layer");
    if (d < 0) throw std::invalid_argument("evaluate_formula: negative range");
    x.assign(ell + 1, std::vector<char>(te.vertex_count(), 0));
    for (int i = 0; i <= ell; ++i)
      for (int v : x_sets[i]) {
        if (v < 0 || v >= te.vertex_count())
          throw std::invalid_argument("evaluate_formula: X vertex out of range");
        x[i][v] = 1;
      }
    s = s_edges;
    for (TeEdge& e : s)
      if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (const TeEdge& e : s)
      if (!te.has_edge(e.u, e.v, e.label))
        throw std::invalid_argument("evaluate_formula: S contains a non-edge (" +
                                    std::to_string(e.u) + "," + std::to_string(e.v) + "," +
                                    te_label_name(e.label) + ")");
  }

  bool incident(int v, const TeEdge& e) const { return e.u == v || e.v == v; }

  int degree(int v) const {
    int count = 0;
    for (const TeEdge& e : s)
      if (incident(v, e)) ++count;
    return count;
  }

  bool in_any_x(int v) const {
    for (const auto& layer : x)
      if (layer[v]) return true;
    return false;
  }

  // dist_d(u, v): communication distance at most d (truncated BFS).
  bool within_range(int u, int v) const {
    if (u == v) return true;
    std::vector<int> dist(te.vertex_count(), -1);
    std::deque<int> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
      int at = queue.front();
      queue.pop_front();
      if (dist[at] >= d) continue;
      for (const auto& [next, mask] : te.adjacency(at))
        if ((mask & static_cast<std::uint8_t>(TeLabel::kCommunication)) && dist[next] < 0) {
          if (next == v) return true;
          dist[next] = dist[at] + 1;
          queue.push_back(next);
        }
    }
    return false;
  }

  // connected(X_i): no split of X_i into two nonempty parts with every
  // cross pair out of range; realized as connectivity of the
  // within-range relation on X_i's members.
  bool connected(int i) const {
    std::vector<int> members;
    for (int v = 0; v < te.vertex_count(); ++v)
      if (x[i][v]) members.push_back(v);
    if (members.size() <= 1) return true;
    const int m = static_cast<int>(members.size());
    std::vector<int> comp(m);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int a) {
      while (comp[a] != a) a = comp[a] = comp[comp[a]];
      return a;
    };
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (within_range(members[a], members[b])) comp[find(a)] = find(b);
    for (int a = 1; a < m; ++a)
      if (find(a) != find(0)) return false;
    return true;
  }

  bool phi1() const {
    for (int i = 0; i <= te.ell(); ++i)
      for (int v = 0; v < te.vertex_count(); ++v)
        if (x[i][v] && te.layer_of(v) != i) return false;
    return true;
  }

  bool phi2() const {
    for (const TeEdge& e : s)
      if (e.label != TeLabel::kCopy && e.label != TeLabel::kCross) return false;
    return true;
  }

  bool phi3() const {
    for (int i = 1; i <= te.ell() - 1; ++i)
      for (int v = 0; v < te.vertex_count(); ++v) {
        if (!x[i][v]) continue;
        if (degree(v) != 2) return false;
        bool below = false, above = false;
        for (const TeEdge& e : s) {
          if (!incident(v, e)) continue;
          int other = e.u == v ? e.v : e.u;
          if (other == v) continue;  // edge-is excludes loops
          below = below || x[i - 1][other];
          above = above || x[i + 1][other];
        }
        if (!below || !above) return false;
      }
    return true;
  }

  bool phi4() const {
    const int ell = te.ell();
    for (int v = 0; v < te.vertex_count(); ++v) {
      if (ell == 0) {
        if (x[0][v] && degree(v) != 0) return false;
      } else {
        if ((x[0][v] || x[ell][v]) && degree(v) != 1) return false;
      }
    }
    return true;
  }

  bool phi5() const {
    for (int v = 0; v < te.vertex_count(); ++v)
      if (!in_any_x(v) && degree(v) != 0) return false;
    return true;
  }

  bool phi6() const {
    const int ell = te.ell();
    for (const Agent& a : te.instance().agents()) {
      int u = te.id_of(a.start, 0);
      int v = te.id_of(a.target, ell);
      if (ell == 0) {
        // Both endpoints must coincide and lie in X_0.
        if (u != v || !x[0][u]) return false;
        continue;
      }
      // A subset T of S tracing a u-v path (endpoint degrees 1, the rest 0
      // or 2) exists exactly when u and v share an S-component.
      std::vector<char> seen(te.vertex_count(), 0);
      std::vector<int> stack{u};
      seen[u] = 1;
      bool reached = false;
      while (!stack.empty() && !reached) {
        int at = stack.back();
        stack.pop_back();
        for (const TeEdge& e : s) {
          if (!incident(at, e)) continue;
          int next = e.u == at ? e.v : e.u;
          if (seen[next]) continue;
          seen[next] = 1;
          if (next == v) reached = true;
          stack.push_back(next);
        }
      }
      if (!reached) return false;
    }
    return true;
  }

  bool phi7() const {
    for (size_t p = 0; p < s.size(); ++p)
      for (size_t q = 0; q < s.size(); ++q) {
        if (p == q) continue;
        const TeEdge& e1 = s[p];
        const TeEdge& e2 = s[q];
        if (e1.u == e1.v || e2.u == e2.v) continue;  // edge-is excludes loops
        for (auto [u1, v1] : {std::pair{e1.u, e1.v}, std::pair{e1.v, e1.u}})
          for (auto [u2, v2] : {std::pair{e2.u, e2.v}, std::pair{e2.v, e2.u}})
            if (te.layer_of(u1) == te.layer_of(u2) && te.layer_of(v1) == te.layer_of(v2) &&
                te.has_edge(u1, v2, TeLabel::kCopy) && te.has_edge(u2, v1, TeLabel::kCopy))
              return false;
      }
    return true;
  }

  bool phi8() const {
    for (int i = 0; i <= te.ell(); ++i)
      if (!connected(i)) return false;
    return true;
  }
};

}  // namespace

FormulaResult evaluate_formula(const TimeExpandedGraph& te, const std::vector<TeEdge>& s_edges,
                               const std::vector<std::vector<int>>& x_sets, int d) {
  Valuation val(te, s_edges, x_sets, d);
  const bool parts[8] = {val.phi1(), val.phi2(), val.phi3(), val.phi4(),
                         val.phi5(), val.phi6(), val.phi7(), val.phi8()};
  FormulaResult result;
  result.satisfied = true;
  for (int i = 0; i < 8; ++i)
    if (!parts[i]) {
      result.satisfied = false;
      result.first_failure = "phi" + std::to_string(i + 1);
      break;
    }
  return result;
}

namespace {

std::string x_name(int i) { return "X" + std::to_string(i); }

std::string conj(const std::vector<std::string>& parts) {
  if (parts.empty()) return "true";
  std::string out = "(and";
  for (const auto& p : parts) out += " " + p;
  return out + ")";
}

std::string render_phi1(int ell) {
  std::vector<std::string> parts;
  for (int i = 0; i <= ell; ++i)
    parts.push_back("(forall-vertex v (implies (vin v " + x_name(i) + ") (vlabel vertex_" +
                    std::to_string(i) + " v)))");
  return conj(parts);
}

std::string render_phi3(int ell) {
  std::vector<std::string> parts;
  for (int i = 1; i <= ell - 1; ++i)
    parts.push_back(
        "(forall-vertex v (implies (vin v " + x_name(i) +
        ") (exists-vertex u (exists-vertex w (exists-edge e (exists-edge f (and (deg2 v S) "
        "(vin u " +
        x_name(i - 1) + ") (vin w " + x_name(i + 1) +
        ") (ein e S) (ein f S) (edge-is e u v) (edge-is f v w))))))))");
  return conj(parts);
}

std::string render_phi4(int ell) {
  if (ell == 0) return "(forall-vertex v (implies (vin v X0) (deg0 v S)))";
  return "(forall-vertex v (implies (or (vin v X0) (vin v " + x_name(ell) +
         ")) (deg1 v S)))";
}

std::string render_phi5(int ell) {
  std::string none = "(and";
  for (int i = 0; i <= ell; ++i) none += " (not (vin v " + x_name(i) + "))";
  none += ")";
  return "(forall-vertex v (implies " + none + " (deg0 v S)))";
}

std::string render_phi6(int ell) {
  if (ell == 0)
    return "(forall-edge e (implies (elabel agent e) (forall-vertex u (forall-vertex v "
           "(implies (and (inc u e) (inc v e)) (and (= u v) (vin u X0)))))))";
  return "(forall-edge e (implies (elabel agent e) (exists-vertex u (exists-vertex v (and "
         "(edge-is e u v) (exists-edge-set T (and (forall-edge f (implies (ein f T) (ein f "
         "S))) (deg1 u T) (deg1 v T) (forall-vertex w (implies (and (not (= w u)) (not (= w "
         "v))) (or (deg0 w T) (deg2 w T)))))))))))";
}

std::string render_phi7() {
  return "(not (exists-edge e1 (exists-edge e2 (exists-edge f1 (exists-edge f2 "
         "(exists-vertex u1 (exists-vertex v1 (exists-vertex u2 (exists-vertex v2 (and (ein "
         "e1 S) (ein e2 S) (not (= e1 e2)) (edge-is e1 u1 v1) (edge-is e2 u2 v2) (elabel "
         "copy f1) (elabel copy f2) (edge-is f1 u1 v2) (edge-is f2 u2 v1) (same-layer u1 u2) "
         "(same-layer v1 v2)))))))))))";
}

std::string render_phi8(int ell) {
  std::vector<std::string> parts;
  for (int i = 0; i <= ell; ++i) parts.push_back("(connected " + x_name(i) + ")");
  return conj(parts);
}

}  // namespace

std::string emit_mso_structure(const TimeExpandedGraph& te, int d) {
  if (d < 0) throw std::invalid_argument("emit_mso_structure: negative range");
  const Instance& inst = te.instance();
  const int ell = te.ell();
  std::ostringstream out;
  out << "msogi 1\n";
  out << "instance n=" << te.base_vertex_count() << " m=" << inst.graph().edge_count()
      << " k=" << inst.agent_count() << " d=" << d << " ell=" << ell << "\n";

  out << "vertices " << te.vertex_count() << "\n";
  for (int id = 0; id < te.vertex_count(); ++id)
    out << "v " << id << " vertex_" << te.layer_of(id) << "\n";

  std::vector<std::tuple<int, int, std::string>> lines;
  for (const TeEdge& e : te.edges()) lines.push_back({e.u, e.v, te_label_name(e.label)});
  std::sort(lines.begin(), lines.end());
  out << "edges " << lines.size() << "\n";
  for (const auto& [u, v, name] : lines) out << "e " << u << " " << v << " " << name << "\n";

  out << "formula\n";
  out << "(def (edge-is e u v) (and (inc u e) (inc v e) (not (= u v))))\n";
  out << "(def (deg0 v F) (not (exists-edge e (and (ein e F) (inc v e)))))\n";
  out << "(def (deg1 v F) (exists-edge e (and (ein e F) (inc v e) (forall-edge f (implies "
         "(and (ein f F) (inc v f)) (= f e))))))\n";
  out << "(def (deg2 v F) (exists-edge e (exists-edge f (and (ein e F) (ein f F) (not (= e "
         "f)) (inc v e) (inc v f) (forall-edge g (implies (and (ein g F) (inc v g)) (or (= g "
         "e) (= g f))))))))\n";
  out << "(def (same-layer u v) (or";
  for (int i = 0; i <= ell; ++i)
    out << " (and (vlabel vertex_" << i << " u) (vlabel vertex_" << i << " v))";
  out << "))\n";
  out << "(def (dist0 u v) (= u v))\n";
  for (int j = 1; j <= d; ++j)
    out << "(def (dist" << j << " u v) (or (dist" << j - 1
        << " u v) (exists-vertex w (exists-edge e (and (dist" << j - 1
        << " u w) (elabel communication e) (edge-is e w v))))))\n";
  out << "(def (connected X) (not (exists-vertex-set A (exists-vertex-set B (and "
         "(exists-vertex a (vin a A)) (exists-vertex b (vin b B)) (forall-vertex x (implies "
         "(or (vin x A) (vin x B)) (vin x X))) (forall-vertex x (implies (vin x X) (and (or "
         "(vin x A) (vin x B)) (not (and (vin x A) (vin x B)))))) (forall-vertex a "
         "(forall-vertex b (implies (and (vin a A) (vin b B)) (not (dist"
      << d << " a b))))))))))\n";

  out << "(sentence\n";
  out << "(exists-edge-set S\n";
  for (int i = 0; i <= ell; ++i) out << "(exists-vertex-set " << x_name(i) << "\n";
  out << "(and\n";
  out << "  " << render_phi1(ell) << "\n";
  out << "  (forall-edge e (implies (ein e S) (or (elabel copy e) (elabel cross e))))\n";
  out << "  " << render_phi3(ell) << "\n";
  out << "  " << render_phi4(ell) << "\n";
  out << "  " << render_phi5(ell) << "\n";
  out << "  " << render_phi6(ell) << "\n";
  out << "  " << render_phi7() << "\n";
  out << "  " << render_phi8(ell) << ")";
  for (int i = 0; i <= ell + 2; ++i) out << ")";
  out << "\n";
  return out.str();
}

}  // namespace mapfcc
