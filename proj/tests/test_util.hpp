#pragma once

#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "chemenum/chemical_graph.hpp"
#include "chemenum/feature.hpp"
#include "chemenum/rooted_tree.hpp"

namespace chemenum::test {

// Paper-style alphabet with total order O < N < C.
inline std::shared_ptr<const ColorTable> table_onc() {
  auto t = std::make_shared<ColorTable>();
  t->add("O", 2);
  t->add("N", 3);
  t->add("C", 4);
  return t;
}

inline ChemicalGraph build(std::shared_ptr<const ColorTable> table,
                           const std::vector<std::string>& colors,
                           const std::vector<std::tuple<int, int, int>>& edges, int d) {
  std::vector<int> ids;
  for (const auto& c : colors) ids.push_back(table->id_or_throw(c));
  ChemicalGraph g(table, ids, d);
  for (auto [u, v, m] : edges) g = add_edges(g, u, v, m);
  return g;
}

// Triangle v0 v1 v2 (all C, simple) with pendant path v0-v3-v4.
inline ChemicalGraph fixture_g0(std::shared_ptr<const ColorTable> t = table_onc(), int d = 3) {
  return build(t, {"C", "C", "C", "C", "C"},
               {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {3, 4, 1}}, d);
}

// G0 plus the closing edge {v0, v4}: two triangles sharing v0.
inline ChemicalGraph fixture_h0(std::shared_ptr<const ColorTable> t = table_onc(), int d = 3) {
  return add_edges(fixture_g0(t, d), 0, 4, 1);
}

// Triangle v0 v1 v2 (all C, simple) with pendant path v0-v3-v4-v5.
inline ChemicalGraph fixture_g1(std::shared_ptr<const ColorTable> t = table_onc(), int d = 3) {
  return build(t, {"C", "C", "C", "C", "C", "C"},
               {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {3, 4, 1}, {4, 5, 1}}, d);
}

// Random colored multi-tree honoring valences; colors drawn uniformly.
inline ChemicalGraph random_tree(std::mt19937& rng, std::shared_ptr<const ColorTable> table, int n,
                                 int d) {
  for (;;) {
    std::vector<int> colors;
    for (int i = 0; i < n; ++i)
      colors.push_back(std::uniform_int_distribution<int>(0, table->size() - 1)(rng));
    ChemicalGraph g(table, colors, d);
    bool ok = true;
    for (int v = 1; v < n && ok; ++v) {
      std::vector<std::pair<int, int>> options;  // (attach, qmax)
      for (int u = 0; u < v; ++u) {
        int qmax = std::min({d, residual_degree(g, u), residual_degree(g, v)});
        if (qmax >= 1) options.emplace_back(u, qmax);
      }
      if (options.empty()) {
        ok = false;
        break;
      }
      auto [u, qmax] = options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng)];
      int q = std::uniform_int_distribution<int>(1, qmax)(rng);
      g = add_edges(g, u, v, q);
    }
    if (ok) return g;
  }
}

// Random monocyclic graph: a random tree plus one closing edge.
inline ChemicalGraph random_monocyclic(std::mt19937& rng, std::shared_ptr<const ColorTable> table,
                                       int n, int d) {
  for (;;) {
    ChemicalGraph t = random_tree(rng, table, n, d);
    std::vector<std::tuple<int, int, int>> options;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (t.adjacent(u, v)) continue;
        int qmax = std::min({d, residual_degree(t, u), residual_degree(t, v)});
        if (qmax >= 1) options.emplace_back(u, v, qmax);
      }
    if (options.empty()) continue;
    auto [u, v, qmax] = options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng)];
    return add_edges(t, u, v, std::uniform_int_distribution<int>(1, qmax)(rng));
  }
}

// Random connected multigraph: a random tree plus up to `extra` edges.
inline ChemicalGraph random_connected(std::mt19937& rng, std::shared_ptr<const ColorTable> table,
                                      int n, int d, int extra) {
  ChemicalGraph g = random_tree(rng, table, n, d);
  for (int e = 0; e < extra; ++e) {
    std::vector<std::tuple<int, int, int>> options;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        int qmax = std::min({d, residual_degree(g, u), residual_degree(g, v)});
        if (qmax >= 1) options.emplace_back(u, v, qmax);
      }
    if (options.empty()) break;
    auto [u, v, qmax] = options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng)];
    g = add_edges(g, u, v, std::uniform_int_distribution<int>(1, qmax)(rng));
  }
  return g;
}

// Independent path counter: enumerates raw vertex sequences and filters by
// adjacency, without the neighbor-guided extension the library uses.
inline long long brute_force_frq(const ColoredSequence& t, const ChemicalGraph& g) {
  long long count = 0;
  int k = t.length();
  std::vector<int> seq;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(seq.size()) == k + 1) {
      for (int i = 0; i <= k; ++i)
        if (g.color(seq[i]) != t.colors[i]) return;
      for (int i = 0; i < k; ++i)
        if (g.mult(seq[i], seq[i + 1]) != t.mults[i]) return;
      ++count;
      return;
    }
    for (int v = 0; v < g.n(); ++v) {
      bool used = false;
      for (int w : seq) used |= (w == v);
      if (used) continue;
      if (!seq.empty() && g.mult(seq.back(), v) == 0) continue;
      seq.push_back(v);
      rec();
      seq.pop_back();
    }
  };
  rec();
  return count;
}

// Maximum (delta, M) over all child orderings, by explicit permutation of
// every child list. Ground truth for the canonical form, n <= 8 or so.
struct OrderedCode {
  std::vector<int> delta;
  std::vector<int> mul;
};

inline void all_orderings(const ChemicalGraph& g, int v, int parent,
                          const std::function<void()>& emit, std::vector<int>& delta,
                          std::vector<int>& mul, int depth) {
  // collect children, then recurse over their permutations
  std::vector<std::pair<int, int>> ch;
  for (const auto& [w, m] : g.neighbors(v))
    if (w != parent) ch.emplace_back(w, m);
  std::sort(ch.begin(), ch.end());
  std::vector<int> idx(ch.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::function<void(size_t)> perm = [&](size_t pos) {
    if (pos == idx.size()) {
      emit();
      return;
    }
    for (size_t i = pos; i < idx.size(); ++i) {
      std::swap(idx[pos], idx[i]);
      auto [w, m] = ch[idx[pos]];
      size_t dmark = delta.size(), mmark = mul.size();
      delta.push_back(g.color(w));
      delta.push_back(depth + 1);
      mul.push_back(m);
      std::function<void()> next = [&, pos]() { perm(pos + 1); };
      all_orderings(g, w, v, next, delta, mul, depth + 1);
      delta.resize(dmark);
      mul.resize(mmark);
      std::swap(idx[pos], idx[i]);
    }
  };
  perm(0);
}

inline OrderedCode brute_force_canonical(const ChemicalGraph& g, int root) {
  OrderedCode best;
  std::vector<int> delta{g.color(root), 0}, mul;
  std::function<void()> emit = [&]() {
    Ord d = lex_compare(delta, best.delta);
    if (best.delta.empty() || d == Ord::Greater ||
        (d == Ord::Equal && lex_compare(mul, best.mul) == Ord::Greater)) {
      best.delta = delta;
      best.mul = mul;
    }
  };
  all_orderings(g, root, -1, emit, delta, mul, 0);
  return best;
}

}  // namespace chemenum::test
