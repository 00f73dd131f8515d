#include "chemenum/mono_gen.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace chemenum {

std::vector<std::pair<int, int>> admissible_pairs(const RootedOrderedTree& t) {
  if (t.edge_rooted) throw std::invalid_argument("admissible_pairs: needs a vertex-rooted tree");
  std::vector<int> copy = copy_flags(t);
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < t.n; ++u) {
    for (int v = u + 1; v < t.n; ++v) {
      if (t.tree_adjacent(u, v)) continue;
      LcaGua lg = lca_gua(t, u, v);
      // (a-1): copy-free path from the lca up to the root, inclusive
      bool ok = true;
      for (int w = lg.lca; w >= 0; w = t.parent[w])
        if (copy[w]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (lg.lca == u) {
        // ancestor pair: the v-side path up to the lca's child must be
        // copy-free, including that child
        for (int w = v; w != u; w = t.parent[w])
          if (copy[w]) {
            ok = false;
            break;
          }
        if (ok) out.emplace_back(u, v);
        continue;
      }
      // (a-2): copy-free from u up to and including the u-side child of the
      // lca, and from v up to but excluding the v-side child
      for (int w = u; w != lg.lca; w = t.parent[w])
        if (copy[w]) {
          ok = false;
          break;
        }
      for (int w = v; ok && w != lg.gua_v; w = t.parent[w])
        if (copy[w]) ok = false;
      if (!ok) continue;
      // (a-3): the v-side child may duplicate only its left sibling being
      // the u-side child, and then only the non-mirrored pair survives
      if (copy[lg.gua_v]) {
        if (lg.gua_u + t.size[lg.gua_u] != lg.gua_v) continue;  // left(gua_v) != gua_u
        if (v < u + t.size[lg.gua_u]) continue;                 // mirrored image is smaller
      }
      out.emplace_back(u, v);
    }
  }
  std::vector<std::pair<int, int>> orig;
  orig.reserve(out.size());
  for (auto [u, v] : out) orig.emplace_back(t.orig[u], t.orig[v]);
  return orig;
}

namespace {

// x,y-path as dfs indices: x-side chain up to the lca, then down to y.
std::vector<int> tree_path(const RootedOrderedTree& t, int x, int y, int* lca_out = nullptr) {
  LcaGua lg = lca_gua(t, x, y);
  std::vector<int> left, right;
  for (int w = x; w != lg.lca; w = t.parent[w]) left.push_back(w);
  left.push_back(lg.lca);
  for (int w = y; w != lg.lca; w = t.parent[w]) right.push_back(w);
  left.insert(left.end(), right.rbegin(), right.rend());
  if (lca_out) *lca_out = lg.lca;
  return left;
}

}  // namespace

std::vector<std::pair<int, int>> pendent_sizes_after_addition(const RootedOrderedTree& t, int x,
                                                              int y) {
  int dx = t.dfs_of.at(x), dy = t.dfs_of.at(y);
  if (dx < 0 || dy < 0) throw std::invalid_argument("vertex not in tree");
  if (t.tree_adjacent(dx, dy)) throw std::invalid_argument("pair must be nonadjacent");
  int lca = -1;
  std::vector<int> path = tree_path(t, dx, dy, &lca);
  std::vector<char> on_path(t.n, 0);
  for (int w : path) on_path[w] = 1;
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < path.size(); ++i) {
    int w = path[i];
    if (w != lca) {
      int child_on_path = -1;
      for (int c : t.children[w])
        if (on_path[c]) child_on_path = c;
      if (child_on_path < 0)
        out.emplace_back(t.orig[w], t.size[w]);  // leaf of the path
      else
        out.emplace_back(t.orig[w], t.size[w] - t.size[child_on_path]);
    } else {
      int total = t.n;
      for (int c : t.children[w])
        if (on_path[c]) total -= t.size[c];
      // a path crossing the root edge hangs the second half off the lca
      if (t.edge_rooted && w == 0 && on_path[t.second_root]) total -= t.size[t.second_root];
      out.emplace_back(t.orig[w], total);
    }
  }
  return out;
}

bool has_big_pendent(const RootedOrderedTree& t, int x, int y) {
  int n = t.n;
  for (auto [v, s] : pendent_sizes_after_addition(t, x, y)) {
    (void)v;
    if (2 * s >= n) return true;
  }
  return false;
}

bool has_big_pendent_centroid(const RootedOrderedTree& t, int x, int y) {
  int n = t.n;
  int dx = t.dfs_of.at(x), dy = t.dfs_of.at(y);
  if (t.tree_adjacent(dx, dy)) throw std::invalid_argument("pair must be nonadjacent");
  if (!t.edge_rooted) {
    LcaGua lg = lca_gua(t, dx, dy);
    if (lg.lca != 0) return true;
    if (lg.lca == dx || lg.lca == dy) return true;
    return 2 * (n - t.size[lg.gua_u] - t.size[lg.gua_v]) >= n;
  }
  // bicentroid: answer depends only on the centroid edge and the endpoints
  bool cross = (dx < t.second_root) != (dy < t.second_root);
  if (!cross) return true;  // centroid edge not on the x,y-path
  if (dx == 0 || dx == t.second_root || dy == 0 || dy == t.second_root) return true;
  return false;
}

int generation_root(const ChemicalGraph& tree) {
  Centroid c = centroid(tree);
  if (!c.is_edge()) return c.a;
  Signature sa = canonicalize(tree, c.a).signature();
  Signature sb = canonicalize(tree, c.b).signature();
  return sb < sa ? c.a : c.b;
}

std::vector<ChemicalGraph> generate_monocyclic(const ChemicalGraph& tree, const FeatureVector& hi,
                                               int d, bool restrict_big, MonoGenStats* stats) {
  MonoGenStats local;
  MonoGenStats& st = stats ? *stats : local;
  RootedOrderedTree t = canonicalize(tree, generation_root(tree));
  std::vector<ChemicalGraph> out;
  for (auto [x, y] : admissible_pairs(t)) {
    if (restrict_big && !has_big_pendent(t, x, y)) {
      ++st.pruned_restrict;
      continue;
    }
    int qmax = std::min({d, residual_degree(tree, x), residual_degree(tree, y)});
    for (int q = 1; q <= qmax; ++q) {
      ++st.candidates;
      ChemicalGraph g = add_edges(tree, x, y, q);
      if (!upper_ok(g, hi)) {
        ++st.pruned_upper;
        continue;
      }
      ++st.emitted;
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<int> monocyclic_key(const ChemicalGraph& g) {
  std::vector<int> cycle = cycle_of(g);
  int p = static_cast<int>(cycle.size());
  std::vector<char> on_cycle(g.n(), 0);
  for (int v : cycle) on_cycle[v] = 1;
  // pendent tree of each cycle vertex: its component when cycle edges are cut
  std::vector<std::vector<int>> pendant_flat(p);
  for (int i = 0; i < p; ++i) {
    std::vector<char> mask(g.n(), 0);
    std::vector<int> stack{cycle[i]};
    mask[cycle[i]] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [w, m] : g.neighbors(u)) {
        (void)m;
        if (mask[w] || (on_cycle[u] && on_cycle[w])) continue;
        mask[w] = 1;
        stack.push_back(w);
      }
    }
    pendant_flat[i] = canonicalize_masked(g, cycle[i], mask).signature().flat();
  }
  auto mult_cy = [&](int i, int j) { return g.mult(cycle[i], cycle[j]); };
  std::vector<int> best;
  for (int start = 0; start < p; ++start) {
    for (int dir : {1, -1}) {
      std::vector<int> key{p};
      for (int k = 0; k < p; ++k) {
        int i = ((start + dir * k) % p + p) % p;
        int j = ((start + dir * (k + 1)) % p + p) % p;
        key.push_back(-2);
        key.insert(key.end(), pendant_flat[i].begin(), pendant_flat[i].end());
        key.push_back(mult_cy(i, j));
      }
      if (best.empty() || lex_compare(key, best) == Ord::Less) best = std::move(key);
    }
  }
  return best;
}

std::vector<ChemicalGraph> tree_seeds(std::shared_ptr<const ColorTable> table,
                                      const std::vector<int>& color_multiset, int d,
                                      const FeatureVector& hi, TreeSeedStats* stats) {
  TreeSeedStats local;
  TreeSeedStats& st = stats ? *stats : local;
  int n = static_cast<int>(color_multiset.size());
  if (n < 1) return {};
  std::vector<int> target(table->size(), 0);
  for (int c : color_multiset) target.at(c)++;

  struct Entry {
    ChemicalGraph g;
    std::vector<int> used;
  };
  std::vector<Entry> level;
  for (int c = 0; c < table->size(); ++c) {
    if (target[c] == 0) continue;
    std::vector<int> used(table->size(), 0);
    used[c] = 1;
    level.push_back({ChemicalGraph(table, {c}, d), used});
  }

  for (int size = 1; size < n; ++size) {
    std::vector<Entry> next;
    std::map<std::vector<int>, char> next_seen;
    for (const Entry& e : level) {
      for (int c = 0; c < table->size(); ++c) {
        if (e.used[c] >= target[c]) continue;
        for (int v = 0; v < e.g.n(); ++v) {
          if (residual_degree(e.g, v) < 1) continue;
          int qmax = std::min({d, residual_degree(e.g, v), table->valence(c)});
          for (int q = 1; q <= qmax; ++q) {
            std::vector<int> colors;
            colors.reserve(size + 1);
            for (int i = 0; i < e.g.n(); ++i) colors.push_back(e.g.color(i));
            colors.push_back(c);
            ChemicalGraph g(table, colors, d);
            for (auto [a, b, m] : e.g.pairs()) g = g.with_mult_unchecked(a, b, m);
            g = g.with_mult_unchecked(v, size, q);
            ++st.grown;
            std::vector<int> key = canonicalize_unrooted(g).signature().flat();
            if (next_seen.count(key)) continue;
            if (!upper_ok(g, hi)) {
              ++st.pruned_upper;
              continue;
            }
            next_seen.emplace(std::move(key), 1);
            std::vector<int> used = e.used;
            used[c]++;
            next.push_back({std::move(g), std::move(used)});
          }
        }
      }
    }
    level = std::move(next);
  }

  std::vector<std::pair<std::vector<int>, ChemicalGraph>> keyed;
  keyed.reserve(level.size());
  for (Entry& e : level)
    keyed.emplace_back(canonicalize_unrooted(e.g).signature().flat(), std::move(e.g));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return lex_compare(a.first, b.first) == Ord::Less; });
  std::vector<ChemicalGraph> out;
  out.reserve(keyed.size());
  for (auto& [k, g] : keyed) {
    (void)k;
    out.push_back(std::move(g));
  }
  st.kept = static_cast<long long>(out.size());
  return out;
}

}  // namespace chemenum
