#include "chemenum/chemical_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace chemenum {

const char* shape_name(ShapeClass s) {
  switch (s) {
    case ShapeClass::MultiTree: return "multitree";
    case ShapeClass::Monocyclic: return "monocyclic";
    case ShapeClass::BiBlock2Aug: return "biblock";
    case ShapeClass::Shared2Aug: return "shared";
    case ShapeClass::Other: return "other";
  }
  return "?";
}

ChemicalGraph::ChemicalGraph(std::shared_ptr<const ColorTable> table, std::vector<int> colors,
                             int max_mult)
    : table_(std::move(table)), colors_(std::move(colors)), max_mult_(max_mult) {
  if (!table_) throw std::invalid_argument("null color table");
  if (max_mult_ < 1) throw std::invalid_argument("max multiplicity must be >= 1");
  for (int c : colors_)
    if (c < 0 || c >= table_->size()) throw std::invalid_argument("color id out of range");
  adj_.assign(colors_.size(), {});
  deg_.assign(colors_.size(), 0);
}

void ChemicalGraph::check_vertex(int v) const {
  if (v < 0 || v >= n()) throw std::out_of_range("unknown vertex id");
}

int ChemicalGraph::mult(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return 0;
  for (const auto& [w, m] : adj_[u])
    if (w == v) return m;
  return 0;
}

int ChemicalGraph::pair_count() const {
  int c = 0;
  for (const auto& nb : adj_) c += static_cast<int>(nb.size());
  return c / 2;
}

std::vector<std::tuple<int, int, int>> ChemicalGraph::pairs() const {
  std::vector<std::tuple<int, int, int>> out;
  for (int u = 0; u < n(); ++u)
    for (const auto& [v, m] : adj_[u])
      if (u < v) out.emplace_back(u, v, m);
  return out;
}

bool ChemicalGraph::connected() const {
  if (n() == 0) return false;
  std::vector<char> seen(n(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& [v, m] : adj_[u]) {
      (void)m;
      if (!seen[v]) {
        seen[v] = 1;
        ++cnt;
        stack.push_back(v);
      }
    }
  }
  return cnt == n();
}

ChemicalGraph ChemicalGraph::with_mult_unchecked(int u, int v, int q) const {
  ChemicalGraph g = *this;
  auto erase_from = [&](int a, int b) {
    auto& nb = g.adj_[a];
    for (size_t i = 0; i < nb.size(); ++i)
      if (nb[i].first == b) {
        g.deg_[a] -= nb[i].second;
        nb.erase(nb.begin() + static_cast<long>(i));
        return;
      }
  };
  erase_from(u, v);
  erase_from(v, u);
  if (q > 0) {
    auto insert_into = [&](int a, int b) {
      auto& nb = g.adj_[a];
      auto it = std::lower_bound(nb.begin(), nb.end(), std::make_pair(b, 0));
      nb.insert(it, {b, q});
      g.deg_[a] += q;
    };
    insert_into(u, v);
    insert_into(v, u);
  }
  return g;
}

int residual_degree(const ChemicalGraph& g, int v) {
  g.check_vertex(v);
  return g.valence(v) - g.deg_[v];
}

ChemicalGraph add_edges(const ChemicalGraph& g, int x, int y, int q) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (x == y) throw std::invalid_argument("add_edges: self-loop");
  if (g.mult(x, y) != 0) throw std::invalid_argument("add_edges: pair already adjacent");
  if (q < 1) throw std::invalid_argument("add_edges: q must be >= 1");
  if (q > g.max_mult() || q > residual_degree(g, x) || q > residual_degree(g, y))
    throw std::invalid_argument("add_edges: multiplicity exceeds bound or residual degree");
  return g.with_mult_unchecked(x, y, q);
}

ChemicalGraph remove_pair_edges(const ChemicalGraph& g, int x, int y) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (g.mult(x, y) == 0) throw std::invalid_argument("remove_pair_edges: pair not adjacent");
  return g.with_mult_unchecked(x, y, 0);
}

namespace {

// Bridge edges of the simple skeleton, as pairs (u, v) with u < v.
std::vector<std::pair<int, int>> skeleton_bridges(const ChemicalGraph& g) {
  int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> bridges;
  int timer = 0;
  // Iterative DFS; parent tracked per vertex to skip the tree edge once.
  struct Frame {
    int v, parent;
    size_t next;
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<Frame> st{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        int w = nb[f.next++].first;
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          st.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v, p = f.parent;
        st.pop_back();
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) bridges.emplace_back(std::min(p, v), std::max(p, v));
        }
      }
    }
  }
  return bridges;
}

}  // namespace

ShapeClass classify(const ChemicalGraph& g) {
  if (!g.connected()) throw std::invalid_argument("classify: disconnected input");
  int m = g.pair_count();
  int n = g.n();
  if (m == n - 1) return ShapeClass::MultiTree;
  if (m == n) return ShapeClass::Monocyclic;
  if (m != n + 1) return ShapeClass::Other;
  // Two independent skeleton cycles. They are edge-disjoint exactly when
  // every vertex of the non-bridge subgraph has even degree there (a vertex
  // shared by both cycles has degree 4; a theta configuration has two
  // vertices of degree 3).
  auto bridges = skeleton_bridges(g);
  std::vector<int> nb_deg(n, 0);
  for (auto [u, v, mult] : g.pairs()) {
    (void)mult;
    if (std::find(bridges.begin(), bridges.end(), std::make_pair(u, v)) == bridges.end()) {
      nb_deg[u]++;
      nb_deg[v]++;
    }
  }
  for (int v = 0; v < n; ++v)
    if (nb_deg[v] % 2 != 0) return ShapeClass::Shared2Aug;
  return ShapeClass::BiBlock2Aug;
}

std::vector<int> cycle_of(const ChemicalGraph& g) {
  if (classify(g) != ShapeClass::Monocyclic)
    throw std::invalid_argument("cycle_of: graph is not monocyclic");
  int n = g.n();
  // Strip degree-1 skeleton vertices until only the cycle remains.
  std::vector<int> sdeg(n, 0);
  for (auto [u, v, m] : g.pairs()) {
    (void)m;
    sdeg[u]++;
    sdeg[v]++;
  }
  std::vector<char> removed(n, 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (sdeg[v] == 1) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    removed[v] = 1;
    for (const auto& [w, m] : g.neighbors(v)) {
      (void)m;
      if (!removed[w] && --sdeg[w] == 1) queue.push_back(w);
    }
  }
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      start = v;
      break;
    }
  // Walk from the lowest cycle vertex toward its lower-labeled cycle neighbor.
  std::vector<int> cyc{start};
  int prev = -1, cur = start;
  do {
    int next = -1;
    for (const auto& [w, m] : g.neighbors(cur)) {
      (void)m;
      if (removed[w] || w == prev) continue;
      if (next < 0 || w < next) next = w;
    }
    if (next == start) break;
    cyc.push_back(next);
    prev = cur;
    cur = next;
  } while (true);
  return cyc;
}

}  // namespace chemenum
