#include "mapfcc/reductions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "mapfcc/graph.hpp"

namespace mapfcc {

MccInstance MccInstance::from_parts(const Graph& h, std::vector<std::vector<int>> classes) {
  if (classes.empty()) throw std::invalid_argument("mcc: need at least one class");
  const int n_h = h.vertex_count();
  std::vector<int> owner(n_h, -1);
  for (size_t i = 0; i < classes.size(); ++i)
    for (int v : classes[i]) {
      if (v < 0 || v >= n_h) throw std::invalid_argument("mcc: class member out of range");
      if (owner[v] >= 0) throw std::invalid_argument("mcc: classes are not disjoint");
      owner[v] = static_cast<int>(i);
    }
  for (int v = 0; v < n_h; ++v)
    if (owner[v] < 0) throw std::invalid_argument("mcc: vertex " + std::to_string(v) +
                                                  " belongs to no class");
  for (const auto& [u, v] : h.edges())
    if (owner[u] == owner[v])
      throw std::invalid_argument("mcc: class " + std::to_string(owner[u]) +
                                  " is not an independent set");

  MccInstance out;
  out.classes_ = std::move(classes);
  out.class_size_ = 0;
  for (const auto& members : out.classes_)
    out.class_size_ = std::max(out.class_size_, static_cast<int>(members.size()));
  int next = n_h;
  for (auto& members : out.classes_)
    while (static_cast<int>(members.size()) < out.class_size_) members.push_back(next++);
  out.h_ = Graph::from_edges(next, h.edges());
  out.class_of_.assign(next, -1);
  for (size_t i = 0; i < out.classes_.size(); ++i)
    for (int v : out.classes_[i]) out.class_of_[v] = static_cast<int>(i);
  return out;
}

namespace {

// Index of column j within class i's surviving columns {0..k-1} minus {i}.
int column_slot(int i, int j) { return j < i ? j : j - 1; }

// Does member p of class x have an edge toward class y (so u^{x,y}_p exists)?
bool edge_vertex_exists(const MccInstance& mcc, int x, int y, int p) {
  for (int q = 0; q < mcc.class_size(); ++q)
    if (mcc.h().has_edge(mcc.member(x, p), mcc.member(y, q))) return true;
  return false;
}

}  // namespace

int GadgetLayout::spine(int i, int j) const {
  if (i < 0 || i >= k_ || j < 0 || j >= k_ || j == i)
    throw std::invalid_argument("spine: bad coordinates");
  return spine_[i * k_ + j];
}

int GadgetLayout::path_vertex(int i, int p, int j) const {
  if (i < 0 || i >= k_ || p < 0 || p >= n_ || j < 0 || j >= k_ || j == i)
    throw std::invalid_argument("path_vertex: bad coordinates");
  return pathv_[(i * n_ + p) * k_ + j];
}

int GadgetLayout::edge_vertex(int x, int y, int p) const {
  if (x < 0 || x >= k_ || y < 0 || y >= k_ || x == y || p < 0 || p >= n_)
    throw std::invalid_argument("edge_vertex: bad coordinates");
  return edgev_[(x * k_ + y) * n_ + p];
}

int GadgetLayout::clique_vertex(int i, int j) const {
  if (i < 0 || i >= k_ || j < 0 || j >= k_ || j == i)
    throw std::invalid_argument("clique_vertex: bad coordinates");
  return clique_[i * k_ + j];
}

std::pair<int, int> GadgetLayout::agent_coords(int idx) const {
  if (idx < 0 || idx >= agent_count()) throw std::invalid_argument("agent_coords: bad index");
  int i = idx / (k_ - 1);
  int pos = idx % (k_ - 1);
  return {i, pos < i ? pos : pos + 1};
}

int GadgetLayout::agent_index(int i, int j) const {
  if (i < 0 || i >= k_ || j < 0 || j >= k_ || j == i)
    throw std::invalid_argument("agent_index: bad coordinates");
  return i * (k_ - 1) + column_slot(i, j);
}

std::string GadgetLayout::describe(int id) const {
  if (id < 0 || id >= vertex_count_) throw std::invalid_argument("describe: bad id");
  return names_[id];
}

GadgetLayout make_layout(const MccInstance& mcc) {
  const int k = mcc.class_count();
  const int n = mcc.class_size();
  if (k < 2) throw std::invalid_argument("make_layout: need at least two classes");

  GadgetLayout layout;
  layout.k_ = k;
  layout.n_ = n;
  layout.spine_.assign(k * k, -1);
  layout.pathv_.assign(k * n * k, -1);
  layout.edgev_.assign(k * k * n, -1);
  layout.clique_.assign(k * k, -1);

  int next = 0;
  auto name = [&](const std::string& text) { layout.names_.push_back(text); };

  for (int i = 0; i < k; ++i) {
    for (int p = 0; p < n; ++p)
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        layout.pathv_[(i * n + p) * k + j] = next++;
        name("v[" + std::to_string(i) + "][" + std::to_string(p) + "," + std::to_string(j) +
             "]");
      }
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      layout.spine_[i * k + j] = next++;
      name("a[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  for (int l = 0; l < k; ++l)
    for (int m = l + 1; m < k; ++m) {
      for (int p = 0; p < n; ++p)
        if (edge_vertex_exists(mcc, l, m, p)) {
          layout.edgev_[(l * k + m) * n + p] = next++;
          name("u[" + std::to_string(l) + "," + std::to_string(m) + "][" + std::to_string(p) +
               "]");
        }
      for (int q = 0; q < n; ++q)
        if (edge_vertex_exists(mcc, m, l, q)) {
          layout.edgev_[(m * k + l) * n + q] = next++;
          name("u[" + std::to_string(m) + "," + std::to_string(l) + "][" + std::to_string(q) +
               "]");
        }
    }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      layout.clique_[i * k + j] = next++;
      name("t[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }

  layout.vertex_count_ = next;
  return layout;
}

std::vector<std::pair<int, int>> build_vertex_gadget(const MccInstance& mcc,
                                                     const GadgetLayout& layout, int i) {
  const int k = mcc.class_count();
  const int n = mcc.class_size();
  if (i < 0 || i >= k) throw std::invalid_argument("build_vertex_gadget: bad class");
  std::vector<int> columns;
  for (int j = 0; j < k; ++j)
    if (j != i) columns.push_back(j);

  std::vector<std::pair<int, int>> edges;
  for (int p = 0; p < n; ++p)
    for (size_t c = 1; c < columns.size(); ++c)
      edges.push_back({layout.path_vertex(i, p, columns[c - 1]),
                       layout.path_vertex(i, p, columns[c])});
  for (size_t c = 1; c < columns.size(); ++c)
    edges.push_back({layout.spine(i, columns[c - 1]), layout.spine(i, columns[c])});
  for (int j : columns)
    for (int p = 0; p < n; ++p)
      edges.push_back({layout.spine(i, j), layout.path_vertex(i, p, j)});
  return edges;
}

std::vector<std::pair<int, int>> build_edge_gadget(const MccInstance& mcc,
                                                   const GadgetLayout& layout, int l, int m) {
  const int k = mcc.class_count();
  if (l < 0 || m < 0 || l >= k || m >= k || l >= m)
    throw std::invalid_argument("build_edge_gadget: need classes l < m");
  std::vector<std::pair<int, int>> edges;
  for (int p = 0; p < mcc.class_size(); ++p)
    for (int q = 0; q < mcc.class_size(); ++q)
      if (mcc.h().has_edge(mcc.member(l, p), mcc.member(m, q)))
        edges.push_back({layout.edge_vertex(l, m, p), layout.edge_vertex(m, l, q)});
  return edges;
}

Reduction reduce_mcc(const MccInstance& mcc) {
  const int k = mcc.class_count();
  const int n = mcc.class_size();
  GadgetLayout layout = make_layout(mcc);

  std::vector<std::pair<int, int>> edges;
  auto add_all = [&](const std::vector<std::pair<int, int>>& more) {
    edges.insert(edges.end(), more.begin(), more.end());
  };

  for (int i = 0; i < k; ++i) add_all(build_vertex_gadget(mcc, layout, i));
  for (int l = 0; l < k; ++l)
    for (int m = l + 1; m < k; ++m) add_all(build_edge_gadget(mcc, layout, l, m));

  // Consecutive vertex gadgets: every bottom-row path vertex of V_i joins
  // every top-row path vertex of V_{i+1}, plus a spine bridge.
  for (int i = 0; i + 1 < k; ++i) {
    int bottom = layout.bottom_index(i);
    int top = layout.top_index(i + 1);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        edges.push_back(
            {layout.path_vertex(i, p, bottom), layout.path_vertex(i + 1, q, top)});
    edges.push_back({layout.spine(i, bottom), layout.spine(i + 1, top)});
  }

  // Edge gadget to vertex gadget: u^{x,y}_p sits next to v^x_{p,y}.
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      if (y == x) continue;
      for (int p = 0; p < n; ++p) {
        int u = layout.edge_vertex(x, y, p);
        if (u >= 0) edges.push_back({u, layout.path_vertex(x, p, y)});
      }
    }

  // Consecutive edge gadgets in class-pair order: the far side of one joins
  // the owner side of the next.
  std::vector<std::pair<int, int>> gadget_order;
  for (int l = 0; l < k; ++l)
    for (int m = l + 1; m < k; ++m) gadget_order.push_back({l, m});
  auto side = [&](int x, int y) {
    std::vector<int> out;
    for (int p = 0; p < n; ++p) {
      int u = layout.edge_vertex(x, y, p);
      if (u >= 0) out.push_back(u);
    }
    return out;
  };
  for (size_t g = 1; g < gadget_order.size(); ++g) {
    auto [pl, pm] = gadget_order[g - 1];
    auto [nl, nm] = gadget_order[g];
    for (int u : side(pm, pl))
      for (int v : side(nl, nm)) edges.push_back({u, v});
  }

  // The clique Q, joined to every edge-gadget vertex.
  std::vector<int> clique;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (j != i) clique.push_back(layout.clique_vertex(i, j));
  for (size_t a = 0; a < clique.size(); ++a)
    for (size_t b = a + 1; b < clique.size(); ++b)
      edges.push_back({clique[a], clique[b]});
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      if (y == x) continue;
      for (int t : clique)
        for (int u : side(x, y)) edges.push_back({t, u});
    }

  std::vector<Agent> agents;
  for (int idx = 0; idx < layout.agent_count(); ++idx) {
    auto [i, j] = layout.agent_coords(idx);
    agents.push_back({layout.spine(i, j), layout.clique_vertex(i, j)});
  }

  Graph g = Graph::from_edges(layout.vertex_count(), edges);
  return Reduction{Instance(g, agents, 1, 3), std::move(layout)};
}

std::optional<std::vector<int>> brute_clique(const MccInstance& mcc) {
  const int k = mcc.class_count();
  const int n = mcc.class_size();
  std::vector<int> pick(k, -1);

  std::function<bool(int)> choose = [&](int i) -> bool {
    if (i == k) return true;
    for (int p = 0; p < n; ++p) {
      int v = mcc.member(i, p);
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = mcc.h().has_edge(mcc.member(j, pick[j]), v);
      if (!ok) continue;
      pick[i] = p;
      if (choose(i + 1)) return true;
    }
    pick[i] = -1;
    return false;
  };
  if (!choose(0)) return std::nullopt;
  std::vector<int> out;
  for (int i = 0; i < k; ++i) out.push_back(mcc.member(i, pick[i]));
  return out;
}

}  // namespace mapfcc
