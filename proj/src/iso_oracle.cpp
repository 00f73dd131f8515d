#include "chemenum/iso_oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <stdexcept>

namespace chemenum {

namespace {

constexpr int kMaxN = 12;

// Dense fixed-size mirror of a small graph; all scratch lives on the stack.
struct Packed {
  int n = 0;
  std::array<std::int8_t, kMaxN * kMaxN> mult{};
  std::array<std::int8_t, kMaxN> color{};
  std::array<std::int16_t, kMaxN> deg{};

  Packed() = default;
  explicit Packed(const ChemicalGraph& g) : n(g.n()) {
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<std::int8_t>(g.color(v));
      deg[v] = static_cast<std::int16_t>(g.degree(v));
      for (const auto& [w, m] : g.neighbors(v)) mult[v * kMaxN + w] = static_cast<std::int8_t>(m);
    }
  }
  int at(int u, int v) const { return mult[u * kMaxN + v]; }
};

// Per-vertex invariant label: color, degree, sorted incident
// (mult, neighbor color, neighbor degree) triples, padded to fixed width.
constexpr int kLabelW = 2 + 3 * 8;
using Label = std::array<int, kLabelW>;

void vertex_labels(const Packed& g, std::array<Label, kMaxN>& lab) {
  for (int v = 0; v < g.n; ++v) {
    Label& l = lab[v];
    l.fill(-1);
    l[0] = g.color[v];
    l[1] = g.deg[v];
    std::array<std::array<int, 3>, kMaxN> inc;
    int k = 0;
    for (int w = 0; w < g.n; ++w)
      if (g.at(v, w)) inc[k++] = {g.at(v, w), g.color[w], g.deg[w]};
    std::sort(inc.begin(), inc.begin() + k);
    for (int i = 0; i < k && 2 + 3 * i + 2 < kLabelW; ++i) {
      l[2 + 3 * i] = inc[i][0];
      l[3 + 3 * i] = inc[i][1];
      l[4 + 3 * i] = inc[i][2];
    }
  }
}

bool packed_isomorphic(const Packed& a, const Packed& b) {
  int n = a.n;
  if (n != b.n) return false;
  std::array<Label, kMaxN> la, lb;
  vertex_labels(a, la);
  vertex_labels(b, lb);
  {
    std::array<Label, kMaxN> sa = la, sb = lb;
    std::sort(sa.begin(), sa.begin() + n);
    std::sort(sb.begin(), sb.begin() + n);
    if (!std::equal(sa.begin(), sa.begin() + n, sb.begin())) return false;
  }
  std::array<std::uint16_t, kMaxN> cand{};
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (la[v] == lb[w]) cand[v] |= static_cast<std::uint16_t>(1u << w);
  std::array<int, kMaxN> order;
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.begin() + n, [&](int x, int y) {
    return __builtin_popcount(cand[x]) < __builtin_popcount(cand[y]);
  });
  std::array<int, kMaxN> map_ab;
  map_ab.fill(-1);
  std::uint16_t used = 0;
  std::function<bool(int)> place = [&](int pos) {
    if (pos == n) return true;
    int v = order[pos];
    std::uint16_t opts = cand[v] & static_cast<std::uint16_t>(~used);
    while (opts) {
      int w = __builtin_ctz(opts);
      opts = static_cast<std::uint16_t>(opts & (opts - 1));
      bool ok = true;
      for (int p = 0; p < pos; ++p) {
        int x = order[p];
        if (a.at(v, x) != b.at(w, map_ab[x])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map_ab[v] = w;
      used = static_cast<std::uint16_t>(used | (1u << w));
      if (place(pos + 1)) return true;
      map_ab[v] = -1;
      used = static_cast<std::uint16_t>(used & ~(1u << w));
    }
    return false;
  };
  return place(0);
}

std::uint64_t packed_hash(const Packed& g) {
  std::array<Label, kMaxN> lab;
  vertex_labels(g, lab);
  std::sort(lab.begin(), lab.begin() + g.n);
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](int x) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  mix(g.n);
  for (int v = 0; v < g.n; ++v)
    for (int x : lab[v]) mix(x);
  return h;
}

std::vector<int> packed_key(const Packed& g) {
  std::array<Label, kMaxN> lab;
  vertex_labels(g, lab);
  std::sort(lab.begin(), lab.begin() + g.n);
  std::vector<int> key;
  key.reserve(1 + g.n * kLabelW);
  key.push_back(g.n);
  for (int v = 0; v < g.n; ++v) key.insert(key.end(), lab[v].begin(), lab[v].end());
  return key;
}

}  // namespace

bool isomorphic(const ChemicalGraph& a, const ChemicalGraph& b) {
  if (a.n() != b.n()) return false;
  if (a.n() > kMaxN) throw std::invalid_argument("isomorphic: graphs too large for the oracle");
  if (a.pair_count() != b.pair_count()) return false;
  return packed_isomorphic(Packed(a), Packed(b));
}

namespace {

bool rooted_iso_rec(const ChemicalGraph& ga, int va, int pa, const ChemicalGraph& gb, int vb,
                    int pb) {
  if (ga.color(va) != gb.color(vb)) return false;
  std::vector<std::pair<int, int>> ca, cb;  // (child, mult)
  for (const auto& [w, m] : ga.neighbors(va))
    if (w != pa) ca.emplace_back(w, m);
  for (const auto& [w, m] : gb.neighbors(vb))
    if (w != pb) cb.emplace_back(w, m);
  if (ca.size() != cb.size()) return false;
  std::vector<char> taken(cb.size(), 0);
  std::function<bool(size_t)> match = [&](size_t i) {
    if (i == ca.size()) return true;
    for (size_t j = 0; j < cb.size(); ++j) {
      if (taken[j] || ca[i].second != cb[j].second) continue;
      if (!rooted_iso_rec(ga, ca[i].first, va, gb, cb[j].first, vb)) continue;
      taken[j] = 1;
      if (match(i + 1)) return true;
      taken[j] = 0;
    }
    return false;
  };
  return match(0);
}

}  // namespace

bool rooted_isomorphic(const RootedTree& a, const RootedTree& b) {
  if (a.g.n() != b.g.n()) return false;
  return rooted_iso_rec(a.g, a.root, -1, b.g, b.root, -1);
}

std::vector<int> IsoClassSet::bucket_key(const ChemicalGraph& g) const {
  return packed_key(Packed(g));
}

bool IsoClassSet::insert(const ChemicalGraph& g) {
  Packed pg(g);
  auto& bucket = buckets_[packed_key(pg)];
  for (int i : bucket)
    if (packed_isomorphic(Packed(graphs_[i]), pg)) return false;
  bucket.push_back(static_cast<int>(graphs_.size()));
  graphs_.push_back(g);
  return true;
}

int IsoClassSet::find(const ChemicalGraph& g) const {
  Packed pg(g);
  auto it = buckets_.find(packed_key(pg));
  if (it == buckets_.end()) return -1;
  for (int i : it->second)
    if (packed_isomorphic(Packed(graphs_[i]), pg)) return i;
  return -1;
}

namespace {

// Exhaustive in/out choice over the upper-triangular pair list with a
// rollback union-find: a branch dies as soon as a component is cut off, the
// cycle budget is spent, or a vertex runs out of valence. Skeletons are
// deduplicated up to color-preserving isomorphism before multiplicities are
// assigned; isomorphic multigraphs have isomorphic skeletons, so assigning
// multiplicities over one representative labeling per skeleton class loses
// nothing.
struct OracleEnum {
  std::vector<int> colors;
  std::shared_ptr<const ColorTable> table_sp;
  int n = 0, d = 1, target = 0, cyc_target = 0;
  ShapeClass shape = ShapeClass::MultiTree;
  const OracleBounds* bounds = nullptr;
  IsoClassSet* out = nullptr;

  std::vector<std::pair<int, int>> pair_list;
  std::vector<std::vector<int>> completed_at;
  std::vector<int> val;
  std::vector<int> sdeg;
  std::vector<char> in_skel;

  // skeleton classes seen so far, bucketed by a hash of the label key;
  // members are always verified by packed_isomorphic, so collisions only
  // cost time
  std::unordered_map<std::uint64_t, std::vector<int>> skel_buckets;
  std::vector<Packed> skel_reps;

  // union-find with explicit rollback; open counts vertices that still have
  // undecided pairs
  std::vector<int> par, comp_size, open_cnt;
  int cycles = 0;

  int find(int v) const {
    while (par[v] >= 0) v = par[v];
    return v;
  }

  void run() {
    pair_list.clear();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pair_list.emplace_back(u, v);
    completed_at.assign(pair_list.size() + 1, {});
    std::vector<int> last(n, 0);
    for (size_t i = 0; i < pair_list.size(); ++i) {
      last[pair_list[i].first] = static_cast<int>(i);
      last[pair_list[i].second] = static_cast<int>(i);
    }
    for (int v = 0; v < n; ++v) completed_at[last[v] + 1].push_back(v);
    val.resize(n);
    for (int v = 0; v < n; ++v) val[v] = table_sp->valence(colors[v]);
    sdeg.assign(n, 0);
    in_skel.assign(pair_list.size(), 0);
    par.assign(n, -1);
    comp_size.assign(n, 1);
    open_cnt.assign(n, 1);
    if (n == 1) {
      if (target == 0) {
        std::vector<std::array<int, 2>> none;
        std::vector<int> no_mults;
        emit_mults(none, no_mults);
      }
      return;
    }
    skeleton(0, 0);
  }

  void skeleton(size_t idx, int used) {
    if (used + static_cast<int>(pair_list.size() - idx) < target) return;
    std::array<int, kMaxN> dec;
    int ndec = 0;
    bool dead = false;
    for (int v : completed_at[idx]) {
      int r = find(v);
      open_cnt[r]--;
      dec[ndec++] = r;
      if (open_cnt[r] == 0 && comp_size[r] != n) dead = true;
    }
    if (!dead) {
      if (idx == pair_list.size()) {
        finish_skeleton();
      } else {
        auto [u, v] = pair_list[idx];
        skeleton(idx + 1, used);
        if (used < target && sdeg[u] < val[u] && sdeg[v] < val[v]) {
          int ru = find(u), rv = find(v);
          if (ru == rv) {
            if (cycles < cyc_target) {
              ++cycles;
              sdeg[u]++;
              sdeg[v]++;
              in_skel[idx] = 1;
              skeleton(idx + 1, used + 1);
              in_skel[idx] = 0;
              sdeg[u]--;
              sdeg[v]--;
              --cycles;
            }
          } else {
            if (comp_size[ru] < comp_size[rv]) std::swap(ru, rv);
            par[rv] = ru;
            comp_size[ru] += comp_size[rv];
            open_cnt[ru] += open_cnt[rv];
            sdeg[u]++;
            sdeg[v]++;
            in_skel[idx] = 1;
            skeleton(idx + 1, used + 1);
            in_skel[idx] = 0;
            sdeg[u]--;
            sdeg[v]--;
            open_cnt[ru] -= open_cnt[rv];
            comp_size[ru] -= comp_size[rv];
            par[rv] = -1;
          }
        }
      }
    }
    for (int i = 0; i < ndec; ++i) open_cnt[dec[i]]++;
  }

  // the skeleton arrives connected with the right edge and cycle count
  void finish_skeleton() {
    std::vector<std::array<int, 2>> edges;
    edges.reserve(target);
    for (size_t i = 0; i < pair_list.size(); ++i)
      if (in_skel[i]) edges.push_back({pair_list[i].first, pair_list[i].second});
    if (cyc_target == 2 && classify_two_cycles(edges) != shape) return;

    Packed pg = pack_skeleton(edges);
    auto& bucket = skel_buckets[packed_hash(pg)];
    for (int i : bucket)
      if (packed_isomorphic(skel_reps[i], pg)) return;  // class already expanded
    bucket.push_back(static_cast<int>(skel_reps.size()));
    skel_reps.push_back(pg);

    std::vector<int> mult_of(edges.size(), 1);
    mults(edges, mult_of, 0);
  }

  Packed pack_skeleton(const std::vector<std::array<int, 2>>& edges) const {
    Packed p;
    p.n = n;
    for (int v = 0; v < n; ++v) {
      p.color[v] = static_cast<std::int8_t>(colors[v]);
      p.deg[v] = static_cast<std::int16_t>(sdeg[v]);
    }
    for (auto [u, v] : edges) {
      p.mult[u * kMaxN + v] = 1;
      p.mult[v * kMaxN + u] = 1;
    }
    return p;
  }

  ShapeClass classify_two_cycles(const std::vector<std::array<int, 2>>& edges) const {
    int m = static_cast<int>(edges.size());
    std::array<std::array<std::pair<int, int>, 16>, kMaxN> adj{};
    std::array<int, kMaxN> adeg{};
    for (int e = 0; e < m; ++e) {
      adj[edges[e][0]][adeg[edges[e][0]]++] = {edges[e][1], e};
      adj[edges[e][1]][adeg[edges[e][1]]++] = {edges[e][0], e};
    }
    std::array<int, kMaxN> disc, low, nb_deg;
    disc.fill(-1);
    nb_deg.fill(0);
    std::array<char, 16> is_bridge{};
    int timer = 0;
    struct Frame {
      int v, pe, next;
    };
    std::array<Frame, kMaxN + 1> st;
    int sp = 0;
    st[sp++] = {0, -1, 0};
    disc[0] = low[0] = timer++;
    while (sp > 0) {
      Frame& f = st[sp - 1];
      if (f.next < adeg[f.v]) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.pe) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          st[sp++] = {w, e, 0};
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = st[--sp];
        if (sp > 0) {
          Frame& p = st[sp - 1];
          low[p.v] = std::min(low[p.v], low[done.v]);
          if (low[done.v] > disc[p.v]) is_bridge[done.pe] = 1;
        }
      }
    }
    for (int e = 0; e < m; ++e)
      if (!is_bridge[e]) {
        nb_deg[edges[e][0]]++;
        nb_deg[edges[e][1]]++;
      }
    for (int v = 0; v < n; ++v)
      if (nb_deg[v] % 2 != 0) return ShapeClass::Shared2Aug;
    return ShapeClass::BiBlock2Aug;
  }

  void mults(const std::vector<std::array<int, 2>>& edges, std::vector<int>& mult_of, size_t k) {
    if (k == edges.size()) {
      emit_mults(edges, mult_of);
      return;
    }
    int u = edges[k][0], v = edges[k][1];
    int cap = std::min({d, val[u] - sdeg[u] + 1, val[v] - sdeg[v] + 1});
    for (int q = 1; q <= cap; ++q) {
      mult_of[k] = q;
      sdeg[u] += q - 1;
      sdeg[v] += q - 1;
      mults(edges, mult_of, k + 1);
      sdeg[u] -= q - 1;
      sdeg[v] -= q - 1;
      mult_of[k] = 1;
    }
  }

  void emit_mults(const std::vector<std::array<int, 2>>& edges, const std::vector<int>& mult_of) {
    ChemicalGraph g(table_sp, colors, d);
    for (size_t i = 0; i < edges.size(); ++i)
      g = g.with_mult_unchecked(edges[i][0], edges[i][1], mult_of[i]);
    if (bounds) {
      if (!feasible(g, bounds->lower, bounds->upper)) return;
      if (bounds->eulf && !eulf_ok(g, *bounds->eulf)) return;
    }
    out->insert(g);
  }
};

}  // namespace

IsoClassSet enumerate_all(ShapeClass shape, const std::vector<int>& color_multiset,
                          std::shared_ptr<const ColorTable> table, int d,
                          const OracleBounds* bounds) {
  int n = static_cast<int>(color_multiset.size());
  if (n > 9) throw std::invalid_argument("enumerate_all: resource guard (n <= 9)");
  if (n < 1) throw std::invalid_argument("enumerate_all: need at least one atom");
  int target;
  switch (shape) {
    case ShapeClass::MultiTree: target = n - 1; break;
    case ShapeClass::Monocyclic: target = n; break;
    case ShapeClass::BiBlock2Aug:
    case ShapeClass::Shared2Aug: target = n + 1; break;
    default: throw std::invalid_argument("enumerate_all: unsupported shape");
  }
  std::vector<int> colors = color_multiset;
  std::sort(colors.begin(), colors.end());

  IsoClassSet out;
  OracleEnum oe;
  oe.colors = colors;
  oe.table_sp = table;
  oe.n = n;
  oe.d = d;
  oe.target = target;
  oe.cyc_target = target - (n - 1);
  oe.shape = shape;
  oe.bounds = bounds;
  oe.out = &out;
  oe.run();
  return out;
}

RepresentsReport represents(const std::vector<ChemicalGraph>& candidate, const IsoClassSet& truth) {
  RepresentsReport rep;
  std::vector<int> matched(truth.size(), 0);
  IsoClassSet seen;
  for (size_t ci = 0; ci < candidate.size(); ++ci) {
    if (!seen.insert(candidate[ci])) {
      rep.duplicates.push_back(static_cast<int>(ci));
      continue;
    }
    int ti = truth.find(candidate[ci]);
    if (ti < 0)
      rep.extra.push_back(static_cast<int>(ci));
    else
      matched[ti] = 1;
  }
  for (int ti = 0; ti < truth.size(); ++ti)
    if (!matched[ti]) rep.missing.push_back(ti);
  return rep;
}

std::string RepresentsReport::to_string() const {
  std::ostringstream os;
  os << "missing=" << missing.size() << " extra=" << extra.size()
     << " duplicates=" << duplicates.size();
  return os.str();
}

}  // namespace chemenum
