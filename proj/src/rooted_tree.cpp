#include "chemenum/rooted_tree.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace chemenum {

Ord lex_compare(const std::vector<int>& a, const std::vector<int>& b) {
  size_t k = std::min(a.size(), b.size());
  for (size_t i = 0; i < k; ++i) {
    if (a[i] < b[i]) return Ord::Less;
    if (a[i] > b[i]) return Ord::Greater;
  }
  if (a.size() < b.size()) return Ord::Less;
  if (a.size() > b.size()) return Ord::Greater;
  return Ord::Equal;
}

bool Signature::operator<(const Signature& o) const {
  Ord d = lex_compare(delta, o.delta);
  if (d != Ord::Equal) return d == Ord::Less;
  return lex_compare(mul, o.mul) == Ord::Less;
}

Ord sig_compare(const Signature& a, const Signature& b) {
  Ord d = lex_compare(a.delta, b.delta);
  if (d != Ord::Equal) return d;
  return lex_compare(a.mul, b.mul);
}

std::string Signature::delta_string(const ColorTable& table) const {
  std::string s;
  for (size_t i = 0; i + 1 < delta.size(); i += 2) {
    s += table.symbol(delta[i]);
    s += std::to_string(delta[i + 1]);
  }
  return s;
}

std::string Signature::mul_string() const {
  std::string s;
  for (size_t i = 0; i < mul.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(mul[i]);
  }
  return s;
}

std::vector<int> Signature::flat() const {
  std::vector<int> f = delta;
  f.push_back(-1);
  f.insert(f.end(), mul.begin(), mul.end());
  return f;
}

Signature RootedOrderedTree::signature() const {
  Signature s;
  s.delta.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    s.delta.push_back(color[i]);
    s.delta.push_back(depth[i]);
  }
  for (int i = 1; i < n; ++i) s.mul.push_back(mul_parent[i]);
  return s;
}

bool RootedOrderedTree::tree_adjacent(int a, int b) const {
  if (parent[a] == b || parent[b] == a) return true;
  if (edge_rooted && ((a == 0 && b == second_root) || (b == 0 && a == second_root))) return true;
  return false;
}

namespace {

// Node of a canonicalized subtree; delta depths are relative to the node.
struct CanonNode {
  int orig = -1;
  int mul_to_parent = 0;
  std::vector<int> delta;
  std::vector<int> mul;
  std::vector<CanonNode> kids;
};

// a (+) b > b (+) a, i.e. a must precede b to maximize the concatenation.
// Ties happen only for a == b here: a subtree code contains exactly one
// depth-1 entry, so distinct codes never commute.
Ord concat_cmp(const std::vector<int>& a, const std::vector<int>& b) {
  size_t total = a.size() + b.size();
  auto ab = [&](size_t i) { return i < a.size() ? a[i] : b[i - a.size()]; };
  auto ba = [&](size_t i) { return i < b.size() ? b[i] : a[i - b.size()]; };
  for (size_t i = 0; i < total; ++i) {
    if (ab(i) != ba(i)) return ab(i) > ba(i) ? Ord::Greater : Ord::Less;
  }
  return Ord::Equal;
}

CanonNode build_canon(const ChemicalGraph& g, int v, int parent, const std::vector<char>* mask) {
  CanonNode node;
  node.orig = v;
  for (const auto& [w, m] : g.neighbors(v)) {
    if (w == parent) continue;
    if (mask && !(*mask)[w]) continue;
    CanonNode child = build_canon(g, w, v, mask);
    child.mul_to_parent = m;
    node.kids.push_back(std::move(child));
  }
  std::stable_sort(node.kids.begin(), node.kids.end(), [](const CanonNode& a, const CanonNode& b) {
    Ord d = concat_cmp(a.delta, b.delta);
    if (d != Ord::Equal) return d == Ord::Greater;
    std::vector<int> ma{a.mul_to_parent}, mb{b.mul_to_parent};
    ma.insert(ma.end(), a.mul.begin(), a.mul.end());
    mb.insert(mb.end(), b.mul.begin(), b.mul.end());
    return lex_compare(ma, mb) == Ord::Greater;
  });
  node.delta = {g.color(v), 0};
  for (const CanonNode& c : node.kids) {
    for (size_t i = 0; i < c.delta.size(); i += 2) {
      node.delta.push_back(c.delta[i]);
      node.delta.push_back(c.delta[i + 1] + 1);
    }
    node.mul.push_back(c.mul_to_parent);
    node.mul.insert(node.mul.end(), c.mul.begin(), c.mul.end());
  }
  return node;
}

void emit_node(const CanonNode& node, int parent_dfs, int depth, RootedOrderedTree& t) {
  int idx = static_cast<int>(t.color.size());
  t.color.push_back(node.delta[0]);
  t.depth.push_back(depth);
  t.parent.push_back(parent_dfs);
  t.mul_parent.push_back(node.mul_to_parent);
  t.size.push_back(1 + static_cast<int>(node.delta.size()) / 2 - 1);
  t.children.emplace_back();
  t.orig.push_back(node.orig);
  for (const CanonNode& c : node.kids) {
    int child_idx = static_cast<int>(t.color.size());
    t.children[idx].push_back(child_idx);
    emit_node(c, idx, depth + 1, t);
  }
}

RootedOrderedTree finish_tree(const ChemicalGraph& g, RootedOrderedTree t) {
  t.n = static_cast<int>(t.color.size());
  t.dfs_of.assign(g.n(), -1);
  for (int i = 0; i < t.n; ++i) t.dfs_of[t.orig[i]] = i;
  return t;
}

}  // namespace

RootedOrderedTree canonicalize(const ChemicalGraph& g, int root, int avoid) {
  std::vector<char> mask;
  const std::vector<char>* mp = nullptr;
  if (avoid >= 0) {
    mask.assign(g.n(), 1);
    mask[avoid] = 0;
    mp = &mask;
  }
  CanonNode cn = build_canon(g, root, -1, mp);
  RootedOrderedTree t;
  emit_node(cn, -1, 0, t);
  return finish_tree(g, t);
}

RootedOrderedTree canonicalize_masked(const ChemicalGraph& g, int root,
                                      const std::vector<char>& mask) {
  CanonNode cn = build_canon(g, root, -1, &mask);
  RootedOrderedTree t;
  emit_node(cn, -1, 0, t);
  return finish_tree(g, t);
}

RootedOrderedTree canonicalize_edge(const ChemicalGraph& g, int u, int v) {
  int q = g.mult(u, v);
  if (q == 0) throw std::invalid_argument("canonicalize_edge: not an edge");
  CanonNode a = build_canon(g, u, v, nullptr);
  CanonNode b = build_canon(g, v, u, nullptr);
  // larger (delta, M) half first
  bool swap = false;
  Ord d = lex_compare(a.delta, b.delta);
  if (d == Ord::Less)
    swap = true;
  else if (d == Ord::Equal && lex_compare(a.mul, b.mul) == Ord::Less)
    swap = true;
  if (swap) std::swap(a, b);

  RootedOrderedTree t;
  emit_node(a, -1, 0, t);
  t.second_root = static_cast<int>(t.color.size());
  b.mul_to_parent = q;
  emit_node(b, 0, 0, t);
  t.parent[t.second_root] = 0;  // root edge; not a child link
  t.depth[t.second_root] = 0;
  t.edge_rooted = true;
  return finish_tree(g, t);
}

RootedOrderedTree canonicalize_unrooted(const ChemicalGraph& g) {
  Centroid c = centroid(g);
  if (c.is_edge()) return canonicalize_edge(g, c.a, c.b);
  return canonicalize(g, c.a);
}

std::vector<Signature> subtree_signatures(const RootedOrderedTree& t) {
  std::vector<Signature> sig(t.n);
  // children carry higher dfs indices, so descending order is post-order
  for (int v = t.n - 1; v >= 0; --v) {
    std::vector<int> order;
    for (int u : t.children[v]) order.push_back(u);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      Ord d = concat_cmp(sig[a].delta, sig[b].delta);
      if (d != Ord::Equal) return d == Ord::Greater;
      std::vector<int> ma{t.mul_parent[a]}, mb{t.mul_parent[b]};
      ma.insert(ma.end(), sig[a].mul.begin(), sig[a].mul.end());
      mb.insert(mb.end(), sig[b].mul.begin(), sig[b].mul.end());
      return lex_compare(ma, mb) == Ord::Greater;
    });
    Signature& s = sig[v];
    s.delta = {t.color[v], 0};
    for (int u : order) {
      for (size_t i = 0; i < sig[u].delta.size(); i += 2) {
        s.delta.push_back(sig[u].delta[i]);
        s.delta.push_back(sig[u].delta[i + 1] + 1);
      }
      s.mul.push_back(t.mul_parent[u]);
      s.mul.insert(s.mul.end(), sig[u].mul.begin(), sig[u].mul.end());
    }
  }
  return sig;
}

Centroid centroid(const ChemicalGraph& g) {
  int n = g.n();
  if (n == 1) return {0, -1};
  std::vector<int> size(n, 1), order, par(n, -1);
  order.reserve(n);
  order.push_back(0);
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (const auto& [w, m] : g.neighbors(v)) {
      (void)m;
      if (w != par[v]) {
        par[w] = v;
        order.push_back(w);
      }
    }
  }
  for (size_t i = order.size(); i-- > 1;) size[par[order[i]]] += size[order[i]];
  std::vector<int> cs;
  for (int v = 0; v < n; ++v) {
    int maxcomp = n - size[v];
    for (const auto& [w, m] : g.neighbors(v)) {
      (void)m;
      if (w != par[v]) maxcomp = std::max(maxcomp, size[w]);
    }
    if (maxcomp <= n / 2) cs.push_back(v);
  }
  if (cs.size() == 1) return {cs[0], -1};
  assert(cs.size() == 2 && g.adjacent(cs[0], cs[1]));
  return {cs[0], cs[1]};
}

LcaGua lca_gua(const RootedOrderedTree& t, int u, int v) {
  if (u == v) throw std::invalid_argument("lca_gua: vertices must differ");
  std::vector<int> chain_u;
  for (int x = u; x >= 0; x = t.parent[x]) chain_u.push_back(x);
  std::vector<char> on_u(t.n, 0);
  for (int x : chain_u) on_u[x] = 1;
  LcaGua r;
  int prev = -1;
  for (int x = v; x >= 0; x = t.parent[x]) {
    if (on_u[x]) {
      r.lca = x;
      r.gua_v = prev;
      break;
    }
    prev = x;
  }
  prev = -1;
  for (int x = u; x != r.lca; x = t.parent[x]) prev = x;
  r.gua_u = prev;
  return r;
}

std::vector<int> copy_flags(const RootedOrderedTree& t) {
  std::vector<int> flag(t.n, 0);
  auto equal_subtrees = [&](int a, int b) {
    if (t.size[a] != t.size[b] || t.mul_parent[a] != t.mul_parent[b]) return false;
    for (int i = 0; i < t.size[a]; ++i) {
      if (t.color[a + i] != t.color[b + i]) return false;
      if (t.depth[a + i] - t.depth[a] != t.depth[b + i] - t.depth[b]) return false;
      if (i > 0 && t.mul_parent[a + i] != t.mul_parent[b + i]) return false;
    }
    return true;
  };
  for (int v = 0; v < t.n; ++v) {
    const auto& ch = t.children[v];
    for (size_t i = 1; i < ch.size(); ++i)
      if (equal_subtrees(ch[i - 1], ch[i])) flag[ch[i]] = 1;
  }
  return flag;
}

TreeRanking TreeRanking::build(const std::vector<RootedTree>& family) {
  std::vector<Signature> all;
  for (const RootedTree& rt : family) {
    RootedOrderedTree t = canonicalize(rt.g, rt.root);
    for (Signature& s : subtree_signatures(t)) all.push_back(std::move(s));
  }
  return from_signatures(std::move(all));
}

TreeRanking TreeRanking::build_ordered(const std::vector<RootedOrderedTree>& family) {
  std::vector<Signature> all;
  for (const RootedOrderedTree& t : family)
    for (Signature& s : subtree_signatures(t)) all.push_back(std::move(s));
  return from_signatures(std::move(all));
}

TreeRanking TreeRanking::from_signatures(std::vector<Signature> all) {
  std::vector<std::vector<int>> flats;
  flats.reserve(all.size());
  for (const Signature& s : all) flats.push_back(s.flat());
  std::vector<int> order = lex_sort_indices(flats);
  TreeRanking r;
  int rank = 0;
  const std::vector<int>* prev = nullptr;
  for (int idx : order) {
    if (!prev || lex_compare(*prev, flats[idx]) != Ord::Equal) ++rank;
    r.ranks_.emplace(all[idx], rank);
    prev = &flats[idx];
  }
  return r;
}

int TreeRanking::rank(const Signature& s) const {
  auto it = ranks_.find(s);
  if (it == ranks_.end()) throw std::out_of_range("TreeRanking: signature not in family closure");
  return it->second;
}

std::vector<int> lex_sort_indices(const std::vector<std::vector<int>>& seqs) {
  std::vector<int> idx(seqs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return lex_compare(seqs[a], seqs[b]) == Ord::Less; });
  return idx;
}

namespace {

void radix_rec(const std::vector<std::vector<int>>& seqs, std::vector<int>& group, size_t pos,
               std::vector<int>& out) {
  if (group.size() <= 1) {
    out.insert(out.end(), group.begin(), group.end());
    return;
  }
  std::vector<int> ended;
  int lo = 0, hi = -1;
  for (int i : group) {
    if (seqs[i].size() <= pos) continue;
    int v = seqs[i][pos];
    if (hi < lo) {
      lo = hi = v;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  std::vector<std::vector<int>> buckets(hi >= lo ? hi - lo + 1 : 0);
  for (int i : group) {
    if (seqs[i].size() <= pos)
      ended.push_back(i);  // proper prefixes sort first
    else
      buckets[seqs[i][pos] - lo].push_back(i);
  }
  out.insert(out.end(), ended.begin(), ended.end());
  for (auto& b : buckets)
    if (!b.empty()) radix_rec(seqs, b, pos + 1, out);
}

}  // namespace

std::vector<int> lex_sort_indices_radix(const std::vector<std::vector<int>>& seqs) {
  std::vector<int> group(seqs.size());
  std::iota(group.begin(), group.end(), 0);
  std::vector<int> out;
  out.reserve(seqs.size());
  radix_rec(seqs, group, 0, out);
  return out;
}

}  // namespace chemenum
