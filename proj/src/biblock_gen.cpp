#include "chemenum/biblock_gen.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "chemenum/mono_gen.hpp"

namespace chemenum {

MonocyclicView decompose(const ChemicalGraph& g) {
  if (classify(g) != ShapeClass::Monocyclic)
    throw std::invalid_argument("decompose: graph is not monocyclic");
  MonocyclicView v;
  v.g = g;
  v.cycle = cycle_of(g);
  int n = g.n();
  v.root_of.assign(n, -1);
  v.parent.assign(n, -1);
  v.depth.assign(n, 0);
  v.sub_size.assign(n, 1);
  v.kids.assign(n, {});
  std::vector<char> on_cycle(n, 0);
  for (int c : v.cycle) on_cycle[c] = 1;
  std::vector<int> order;
  for (int c : v.cycle) {
    v.root_of[c] = c;
    order.push_back(c);
    for (size_t i = order.size() - 1; i < order.size(); ++i) {
      int u = order[i];
      for (const auto& [w, m] : g.neighbors(u)) {
        (void)m;
        if (on_cycle[w] || v.root_of[w] >= 0) continue;
        v.root_of[w] = c;
        v.parent[w] = u;
        v.depth[w] = v.depth[u] + 1;
        v.kids[u].push_back(w);
        order.push_back(w);
      }
    }
  }
  for (size_t i = order.size(); i-- > 0;) {
    int u = order[i];
    if (v.parent[u] >= 0) v.sub_size[v.parent[u]] += v.sub_size[u];
  }
  for (int c : v.cycle)
    if (2 * v.sub_size[c] >= n) v.big_root = c;
  return v;
}

BiBlockView analyze_biblock(const ChemicalGraph& g) {
  if (classify(g) != ShapeClass::BiBlock2Aug)
    throw std::invalid_argument("analyze_biblock: graph is not a bi-block 2-augmented tree");
  int n = g.n();
  BiBlockView h;
  h.g = g;
  // spanning tree; the two non-tree pairs close the two cycles
  std::vector<int> par(n, -2);
  par[0] = -1;
  std::vector<int> bfs{0};
  for (size_t i = 0; i < bfs.size(); ++i) {
    int u = bfs[i];
    for (const auto& [w, m] : g.neighbors(u)) {
      (void)m;
      if (par[w] == -2) {
        par[w] = u;
        bfs.push_back(w);
      }
    }
  }
  std::vector<std::pair<int, int>> extra;
  for (auto [u, v, m] : g.pairs()) {
    (void)m;
    if (par[u] != v && par[v] != u) extra.emplace_back(u, v);
  }
  assert(extra.size() == 2);
  auto fundamental = [&](std::pair<int, int> e) {
    std::vector<int> a_chain, b_chain;
    for (int x = e.first; x >= 0; x = par[x]) a_chain.push_back(x);
    std::vector<char> on_a(n, 0);
    for (int x : a_chain) on_a[x] = 1;
    int meet = -1;
    for (int x = e.second; x >= 0; x = par[x]) {
      b_chain.push_back(x);
      if (on_a[x]) {
        meet = x;
        break;
      }
    }
    std::vector<int> cyc;
    for (int x : a_chain) {
      cyc.push_back(x);
      if (x == meet) break;
    }
    for (size_t i = b_chain.size() - 1; i-- > 0;) cyc.push_back(b_chain[i]);
    return cyc;  // e.first ... meet ... e.second, closed by the extra pair
  };
  h.cycle_a = fundamental(extra[0]);
  h.cycle_b = fundamental(extra[1]);

  std::vector<char> in_a(n, 0), in_b(n, 0);
  for (int x : h.cycle_a) in_a[x] = 1;
  for (int x : h.cycle_b) in_b[x] = 1;
  std::vector<int> shared;
  for (int x = 0; x < n; ++x)
    if (in_a[x] && in_b[x]) shared.push_back(x);

  if (shared.size() == 1) {
    h.anc_a = h.anc_b = shared[0];
    h.path = {shared[0]};
  } else {
    assert(shared.empty());
    // walk from cycle a to cycle b avoiding cycle edges
    auto cycle_edge = [&](int u, int w) {
      auto on = [&](const std::vector<int>& cyc, int a, int b) {
        int p = static_cast<int>(cyc.size());
        for (int i = 0; i < p; ++i) {
          int x = cyc[i], y = cyc[(i + 1) % p];
          if ((x == a && y == b) || (x == b && y == a)) return true;
        }
        return false;
      };
      return on(h.cycle_a, u, w) || on(h.cycle_b, u, w);
    };
    std::vector<int> from(n, -1), origin(n, -1);
    std::vector<int> q;
    for (int x : h.cycle_a) {
      origin[x] = x;
      q.push_back(x);
    }
    int hit = -1;
    for (size_t i = 0; i < q.size() && hit < 0; ++i) {
      int u = q[i];
      for (const auto& [w, m] : g.neighbors(u)) {
        (void)m;
        if (origin[w] >= 0 || cycle_edge(u, w)) continue;
        origin[w] = origin[u];
        from[w] = u;
        if (in_b[w]) {
          hit = w;
          break;
        }
        q.push_back(w);
      }
    }
    assert(hit >= 0);
    h.anc_b = hit;
    std::vector<int> rev;
    for (int x = hit; x >= 0; x = from[x]) rev.push_back(x);
    h.anc_a = rev.back();
    h.path.assign(rev.rbegin(), rev.rend());
  }

  auto rotate_to_anchor = [](std::vector<int>& cyc, int anc) {
    auto it = std::find(cyc.begin(), cyc.end(), anc);
    std::rotate(cyc.begin(), it, cyc.end());
  };
  rotate_to_anchor(h.cycle_a, h.anc_a);
  rotate_to_anchor(h.cycle_b, h.anc_b);

  // block sizes: reachable from the anchor without path/other-cycle edges
  auto q_size = [&](const std::vector<int>& other, int anc) {
    auto is_path_edge = [&](int u, int w) {
      for (size_t i = 0; i + 1 < h.path.size(); ++i)
        if ((h.path[i] == u && h.path[i + 1] == w) || (h.path[i] == w && h.path[i + 1] == u))
          return true;
      return false;
    };
    auto is_other_cycle_edge = [&](int u, int w) {
      int p = static_cast<int>(other.size());
      for (int i = 0; i < p; ++i) {
        int x = other[i], y = other[(i + 1) % p];
        if ((x == u && y == w) || (x == w && y == u)) return true;
      }
      return false;
    };
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{anc};
    seen[anc] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [w, m] : g.neighbors(u)) {
        (void)m;
        if (seen[w] || is_path_edge(u, w) || is_other_cycle_edge(u, w)) continue;
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
    }
    return cnt;
  };
  h.q_a = q_size(h.cycle_b, h.anc_a);
  h.q_b = q_size(h.cycle_a, h.anc_b);

  h.anchor_pairs = {{h.anc_a, h.cycle_a[1]},
                    {h.anc_a, h.cycle_a.back()},
                    {h.anc_b, h.cycle_b[1]},
                    {h.anc_b, h.cycle_b.back()}};
  h.mma = g.mult(h.anchor_pairs[0].first, h.anchor_pairs[0].second);
  for (auto [u, w] : h.anchor_pairs) h.mma = std::min(h.mma, g.mult(u, w));
  return h;
}

namespace {

// vertex set of G<u> as a mask
std::vector<char> subtree_mask(const MonocyclicView& v, int u) {
  std::vector<char> mask(v.n(), 0);
  std::vector<int> stack{u};
  mask[u] = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int c : v.kids[a]) {
      mask[c] = 1;
      stack.push_back(c);
    }
  }
  return mask;
}

std::vector<char> tg_mask(const MonocyclicView& v, int u) {
  int p = v.parent[u];
  std::vector<char> mask = subtree_mask(v, p < 0 ? v.root_of[u] : p);
  std::vector<int> stack{u};
  mask[u] = 0;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int c : v.kids[a]) {
      mask[c] = 0;
      stack.push_back(c);
    }
  }
  return mask;
}

}  // namespace

std::vector<RootedOrderedTree> pendent_family(const MonocyclicView& view) {
  if (view.big_root < 0) return {};
  std::vector<RootedOrderedTree> fam;
  for (int c : view.cycle) fam.push_back(canonicalize_masked(view.g, c, subtree_mask(view, c)));
  std::vector<char> big = subtree_mask(view, view.big_root);
  for (int u = 0; u < view.n(); ++u) {
    if (!big[u]) continue;
    if (u != view.big_root) {
      int p = view.parent[u];
      fam.push_back(canonicalize_masked(view.g, p, tg_mask(view, u)));
    }
    // G<u> itself is a rooted subtree of the big pendent tree and is
    // covered by the closure of fam[cycle index of big_root].
  }
  return fam;
}

PendantContext make_pendant_context(const MonocyclicView& view) {
  PendantContext ctx;
  ctx.sub.assign(view.n(), {});
  ctx.tg.assign(view.n(), {});
  std::vector<RootedOrderedTree> fam;
  for (int c : view.cycle) {
    RootedOrderedTree t = canonicalize_masked(view.g, c, subtree_mask(view, c));
    std::vector<Signature> sigs = subtree_signatures(t);
    for (int i = 0; i < t.n; ++i) ctx.sub[t.orig[i]] = std::move(sigs[i]);
    fam.push_back(std::move(t));
  }
  if (view.big_root >= 0) {
    std::vector<char> big = subtree_mask(view, view.big_root);
    for (int u = 0; u < view.n(); ++u) {
      if (!big[u] || u == view.big_root) continue;
      int p = view.parent[u];
      RootedOrderedTree t = canonicalize_masked(view.g, p, tg_mask(view, u));
      ctx.tg[u] = t.signature();
      fam.push_back(std::move(t));
    }
  }
  ctx.ranking = TreeRanking::build_ordered(fam);
  return ctx;
}

namespace {

struct CodeBuilder {
  const MonocyclicView& view;
  const PendantContext& ctx;
  int x, y, q;
  std::vector<int> spine;     // big_root ... x ... y (pendent-tree path)
  size_t xi = 0;              // index of x on the spine
  int deg_x_h, deg_y_h;

  CodeBuilder(const MonocyclicView& v, const PendantContext& c, int x_, int y_, int q_)
      : view(v), ctx(c), x(x_), y(y_), q(q_) {
    for (int w = y; w >= 0; w = view.parent[w]) spine.push_back(w);
    std::reverse(spine.begin(), spine.end());
    assert(spine.front() == view.big_root && spine.back() == y);
    auto it = std::find(spine.begin(), spine.end(), x);
    if (it == spine.end()) throw std::invalid_argument("child_check: x is not an ancestor of y");
    xi = static_cast<size_t>(it - spine.begin());
    deg_x_h = view.g.degree(x) + q;
    deg_y_h = view.g.degree(y) + q;
  }

  int deg_h(int v) const {
    if (v == x) return deg_x_h;
    if (v == y) return deg_y_h;
    return view.g.degree(v);
  }

  // rank(H<v>) for v on the cycle of G, on the connecting path, or on the
  // new cycle; `next_on_spine` is v's spine child when v lies on the spine.
  int rank_h(int v) const {
    for (size_t i = 0; i + 1 < spine.size(); ++i)
      if (spine[i] == v) return ctx.ranking.rank(ctx.tg[spine[i + 1]]);
    if (v == y) return ctx.ranking.rank(ctx.sub[y]);
    return ctx.ranking.rank(ctx.sub[v]);  // cycle vertex off the spine
  }

  std::vector<int> path_code(const std::vector<int>& vs, const std::vector<int>& mults) const {
    std::vector<int> code;
    for (size_t i = 0; i < vs.size(); ++i) {
      code.push_back(rank_h(vs[i]));
      if (i < mults.size()) code.push_back(mults[i]);
    }
    return code;
  }

  std::vector<int> anchor_code(int v, int p1, int p2) const {
    std::vector<int> a{view.g.color(p1), deg_h(p1), rank_h(p1)};
    std::vector<int> b{view.g.color(p2), deg_h(p2), rank_h(p2)};
    if (lex_compare(b, a) == Ord::Less) std::swap(a, b);
    return {view.g.color(v), deg_h(v), rank_h(v), a[0], b[0], a[1], b[1], a[2], b[2]};
  }

  // cycle code: min over both orientations from the anchor; the final edge
  // back to the anchor is not part of either path
  std::vector<int> cycle_code(const std::vector<int>& cyc, const std::vector<int>& mults_fwd,
                              const std::vector<int>& mults_rev,
                              const std::vector<int>& cyc_rev) const {
    std::vector<int> f = path_code(cyc, mults_fwd);
    std::vector<int> r = path_code(cyc_rev, mults_rev);
    return lex_compare(f, r) == Ord::Less ? f : r;
  }

  // the old cycle as a path from the anchor (big_root), both orientations
  void old_cycle_paths(std::vector<int>& fwd, std::vector<int>& mf, std::vector<int>& rev,
                       std::vector<int>& mr) const {
    const std::vector<int>& cyc = view.cycle;
    int p = static_cast<int>(cyc.size());
    int a = 0;
    while (cyc[a] != view.big_root) ++a;
    for (int k = 0; k < p; ++k) fwd.push_back(cyc[(a + k) % p]);
    for (int k = 0; k < p; ++k) rev.push_back(cyc[(a - k + p * 2) % p]);
    for (int k = 0; k + 1 < p; ++k) mf.push_back(view.g.mult(fwd[k], fwd[k + 1]));
    for (int k = 0; k + 1 < p; ++k) mr.push_back(view.g.mult(rev[k], rev[k + 1]));
  }

  // code*_C of the old cycle C
  std::vector<int> star_old() const {
    int n = view.n();
    int v1 = spine[1];
    int q_c = n - view.sub_size[v1];  // |Q(C, H)|
    std::vector<int> fwd, mf, rev, mr;
    old_cycle_paths(fwd, mf, rev, mr);
    std::vector<int> code{n - q_c, static_cast<int>(view.cycle.size())};
    std::vector<int> anc = anchor_code(view.big_root, fwd[1], rev[1]);
    code.insert(code.end(), anc.begin(), anc.end());
    // connecting path read from this cycle's anchor: big_root ... x
    std::vector<int> pc;
    for (size_t i = 0; i <= xi; ++i) {
      pc.push_back(rank_h(spine[i]));
      if (i < xi) pc.push_back(view.g.mult(spine[i], spine[i + 1]));
    }
    code.insert(code.end(), pc.begin(), pc.end());
    std::vector<int> cc = cycle_code(fwd, mf, mr, rev);
    code.insert(code.end(), cc.begin(), cc.end());
    return code;
  }

  // the new cycle as vertex lists: tree-first and new-edge-first
  void new_cycle_paths(std::vector<int>& tree_first, std::vector<int>& mt,
                       std::vector<int>& edge_first, std::vector<int>& me) const {
    for (size_t i = xi; i < spine.size(); ++i) tree_first.push_back(spine[i]);
    for (size_t i = 0; i + 1 < tree_first.size(); ++i)
      mt.push_back(view.g.mult(tree_first[i], tree_first[i + 1]));
    edge_first.push_back(x);
    for (size_t i = spine.size(); i-- > xi + 1;) edge_first.push_back(spine[i]);
    me.push_back(q);
    for (size_t i = 1; i + 1 < edge_first.size(); ++i)
      me.push_back(view.g.mult(edge_first[i], edge_first[i + 1]));
  }

  std::vector<int> star_new() const {
    int n = view.n();
    int q_c2 = view.sub_size[x];  // |Q(C', H)|
    std::vector<int> tf, mt, ef, me;
    new_cycle_paths(tf, mt, ef, me);
    int clen = static_cast<int>(tf.size());
    std::vector<int> code{n - q_c2, clen};
    std::vector<int> anc = anchor_code(x, tf[1], y);
    code.insert(code.end(), anc.begin(), anc.end());
    // connecting path read from this cycle's anchor: x ... big_root
    std::vector<int> pc;
    for (size_t i = xi + 1; i-- > 0;) {
      pc.push_back(rank_h(spine[i]));
      if (i > 0) pc.push_back(view.g.mult(spine[i], spine[i - 1]));
    }
    code.insert(code.end(), pc.begin(), pc.end());
    std::vector<int> cc = cycle_code(tf, mt, me, ef);
    code.insert(code.end(), cc.begin(), cc.end());
    return code;
  }
};

}  // namespace

CandidateCodes candidate_codes(const MonocyclicView& view, const PendantContext& ctx, int x, int y,
                               int q) {
  if (view.big_root < 0) throw std::invalid_argument("candidate_codes: no big pendent tree");
  if (view.root_of[x] != view.big_root || view.root_of[y] != view.big_root || view.on_cycle(y))
    throw std::invalid_argument("candidate_codes: pair outside the big pendent tree");
  CodeBuilder cb(view, ctx, x, y, q);
  CandidateCodes codes;
  codes.star_new = cb.star_new();
  codes.star_old = cb.star_old();
  std::vector<int> tf, mt, ef, me;
  cb.new_cycle_paths(tf, mt, ef, me);
  codes.path_fwd = cb.path_code(ef, me);  // starts with the new edge: x, y, ...
  codes.path_rev = cb.path_code(tf, mt);  // x, tree child, ..., y
  return codes;
}

std::vector<std::pair<int, int>> potential_edges(const MonocyclicView& view) {
  std::vector<std::pair<int, int>> out;
  if (view.big_root < 0) return out;
  int n = view.n();
  int clen = static_cast<int>(view.cycle.size());
  int v_star = view.big_root;
  for (int v1 : view.kids[v_star]) {
    int bound = n - view.sub_size[v1];
    // x runs over {v*} and the subtree of v1, pruned where |G<x>| drops
    // below the bound (no deeper pair can compete with the old cycle)
    std::vector<int> stack{v1};
    std::vector<int> xs{v_star};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (view.sub_size[u] < bound) continue;
      xs.push_back(u);
      for (int c : view.kids[u]) stack.push_back(c);
    }
    for (int x : xs) {
      int first = n - view.sub_size[x];
      if (first > view.sub_size[v1]) continue;
      bool need_len = first == view.sub_size[v1];
      // descendants of x within the v1 branch
      std::vector<int> dstack;
      if (x == v_star)
        dstack.push_back(v1);
      else
        for (int c : view.kids[x]) dstack.push_back(c);
      while (!dstack.empty()) {
        int y = dstack.back();
        dstack.pop_back();
        for (int c : view.kids[y]) dstack.push_back(c);
        if (view.g.adjacent(x, y)) continue;
        if (need_len && view.depth[y] > clen + view.depth[x] - 1) continue;
        out.emplace_back(x, y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool child_check(const MonocyclicView& view, const PendantContext& ctx, int x, int y, int q) {
  if (q < 1 || q > std::min({view.g.max_mult(), residual_degree(view.g, x),
                             residual_degree(view.g, y)}))
    throw std::invalid_argument("child_check: bad multiplicity");
  if (view.g.adjacent(x, y)) throw std::invalid_argument("child_check: pair already adjacent");
  CandidateCodes codes = candidate_codes(view, ctx, x, y, q);
  if (lex_compare(codes.star_new, codes.star_old) == Ord::Greater) return false;
  return lex_compare(codes.path_fwd, codes.path_rev) != Ord::Greater;
}

namespace {

// pendent signatures of a bi-block graph, per vertex on the cycles/path
struct HPendants {
  TreeRanking ranking;
  std::vector<Signature> sig;  // by vertex; only cycle/path vertices filled
};

HPendants h_pendants(const BiBlockView& h) {
  const ChemicalGraph& g = h.g;
  int n = g.n();
  std::vector<char> blocked_edge(n * n, 0);
  auto block = [&](int u, int v) {
    blocked_edge[u * n + v] = blocked_edge[v * n + u] = 1;
  };
  auto block_cycle = [&](const std::vector<int>& cyc) {
    int p = static_cast<int>(cyc.size());
    for (int i = 0; i < p; ++i) block(cyc[i], cyc[(i + 1) % p]);
  };
  block_cycle(h.cycle_a);
  block_cycle(h.cycle_b);
  for (size_t i = 0; i + 1 < h.path.size(); ++i) block(h.path[i], h.path[i + 1]);

  std::vector<int> roots;
  roots.insert(roots.end(), h.cycle_a.begin(), h.cycle_a.end());
  roots.insert(roots.end(), h.cycle_b.begin(), h.cycle_b.end());
  for (int v : h.path) roots.push_back(v);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  HPendants hp;
  hp.sig.assign(n, {});
  std::vector<RootedOrderedTree> fam;
  for (int r : roots) {
    std::vector<char> mask(n, 0);
    std::vector<int> stack{r};
    mask[r] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [w, m] : g.neighbors(u)) {
        (void)m;
        if (mask[w] || blocked_edge[u * n + w]) continue;
        mask[w] = 1;
        stack.push_back(w);
      }
    }
    RootedOrderedTree t = canonicalize_masked(g, r, mask);
    hp.sig[r] = t.signature();
    fam.push_back(std::move(t));
  }
  hp.ranking = TreeRanking::build_ordered(fam);
  return hp;
}

std::vector<int> star_code_of(const BiBlockView& h, const HPendants& hp,
                              const std::vector<int>& cyc, int q_own) {
  const ChemicalGraph& g = h.g;
  int n = g.n();
  int p = static_cast<int>(cyc.size());
  auto rank = [&](int v) { return hp.ranking.rank(hp.sig[v]); };
  std::vector<int> code{n - q_own, p};
  {
    std::vector<int> a{g.color(cyc[1]), g.degree(cyc[1]), rank(cyc[1])};
    std::vector<int> b{g.color(cyc[p - 1]), g.degree(cyc[p - 1]), rank(cyc[p - 1])};
    if (lex_compare(b, a) == Ord::Less) std::swap(a, b);
    int v = cyc[0];
    std::vector<int> anc{g.color(v), g.degree(v), rank(v), a[0], b[0], a[1], b[1], a[2], b[2]};
    code.insert(code.end(), anc.begin(), anc.end());
  }
  // connecting path read from this cycle's anchor
  std::vector<int> path = h.path;
  if (path.front() != cyc[0]) std::reverse(path.begin(), path.end());
  for (size_t i = 0; i < path.size(); ++i) {
    code.push_back(rank(path[i]));
    if (i + 1 < path.size()) code.push_back(g.mult(path[i], path[i + 1]));
  }
  // cycle code: min over the two orientations from the anchor
  auto orient = [&](int dir) {
    std::vector<int> c;
    for (int k = 0; k < p; ++k) {
      int i = ((dir * k) % p + p) % p;
      c.push_back(rank(cyc[i]));
      if (k + 1 < p) {
        int j = ((dir * (k + 1)) % p + p) % p;
        c.push_back(g.mult(cyc[i], cyc[j]));
      }
    }
    return c;
  };
  std::vector<int> f = orient(1), r = orient(-1);
  std::vector<int>& cc = lex_compare(f, r) == Ord::Less ? f : r;
  code.insert(code.end(), cc.begin(), cc.end());
  return code;
}

}  // namespace

std::pair<ChemicalGraph, std::pair<int, int>> parent_of(const ChemicalGraph& biblock) {
  BiBlockView h = analyze_biblock(biblock);
  HPendants hp = h_pendants(h);
  std::vector<int> sa = star_code_of(h, hp, h.cycle_a, h.q_a);
  std::vector<int> sb = star_code_of(h, hp, h.cycle_b, h.q_b);
  // the code-minimal cycle loses its anchor-pair edge; ties fall back to
  // vertex labels, which only normalizes the oracle's choice
  const std::vector<int>& cyc = lex_compare(sb, sa) == Ord::Less ? h.cycle_b : h.cycle_a;
  auto rank = [&](int v) { return hp.ranking.rank(hp.sig[v]); };
  int p = static_cast<int>(cyc.size());
  auto path_from_anchor = [&](int dir) {
    std::vector<int> c;
    for (int k = 0; k < p; ++k) {
      int i = ((dir * k) % p + p) % p;
      c.push_back(rank(cyc[i]));
      if (k + 1 < p) {
        int j = ((dir * (k + 1)) % p + p) % p;
        c.push_back(h.g.mult(cyc[i], cyc[j]));
      }
    }
    return c;
  };
  std::vector<int> f = path_from_anchor(1), r = path_from_anchor(-1);
  Ord o = lex_compare(f, r);
  int second;
  if (o == Ord::Less)
    second = cyc[1];
  else if (o == Ord::Greater)
    second = cyc[p - 1];
  else
    second = std::min(cyc[1], cyc[p - 1]);
  return {remove_pair_edges(h.g, cyc[0], second), {cyc[0], second}};
}

std::vector<ChemicalGraph> generate_children(const MonocyclicView& view, const FeatureVector& hi,
                                             int d, BiBlockGenStats* stats) {
  BiBlockGenStats local;
  BiBlockGenStats& st = stats ? *stats : local;
  std::vector<ChemicalGraph> out;
  if (view.big_root < 0) return out;

  std::vector<std::pair<int, int>> epot = potential_edges(view);
  if (epot.empty()) return out;

  RootedOrderedTree big =
      canonicalize_masked(view.g, view.big_root, subtree_mask(view, view.big_root));
  std::set<std::pair<int, int>> adm;
  for (auto pr : admissible_pairs(big)) adm.insert(pr);

  PendantContext ctx = make_pendant_context(view);
  for (auto [x, y] : epot) {
    if (!adm.count({x, y})) continue;
    int qmax = std::min({d, residual_degree(view.g, x), residual_degree(view.g, y)});
    for (int q = 1; q <= qmax; ++q) {
      ++st.candidates;
      if (!child_check(view, ctx, x, y, q)) {
        ++st.rejected_child;
        continue;
      }
      ChemicalGraph h = add_edges(view.g, x, y, q);
      if (!upper_ok(h, hi)) {
        ++st.pruned_upper;
        continue;
      }
      assert(classify(h) == ShapeClass::BiBlock2Aug);
      ++st.emitted;
      out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace chemenum
