#include "chemenum/feature.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace chemenum {

ColoredSequence ColoredSequence::reversed() const {
  ColoredSequence r;
  r.colors.assign(colors.rbegin(), colors.rend());
  r.mults.assign(mults.rbegin(), mults.rend());
  return r;
}

std::string ColoredSequence::encode(const ColorTable& table) const {
  std::string s;
  for (size_t i = 0; i < colors.size(); ++i) {
    if (i > 0) s += static_cast<char>('0' + mults[i - 1]);
    s += table.symbol(colors[i]);
  }
  return s;
}

ColoredSequence ColoredSequence::parse(const std::string& text, const ColorTable& table) {
  ColoredSequence t;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] >= '0' && text[i] <= '9') {
      if (t.colors.empty()) throw std::invalid_argument("sequence starts with a digit: " + text);
      int m = text[i] - '0';
      if (m < 1) throw std::invalid_argument("multiplicity 0 in sequence: " + text);
      t.mults.push_back(m);
      ++i;
      if (i == text.size()) throw std::invalid_argument("sequence ends with a digit: " + text);
    } else if (!t.colors.empty() && t.mults.size() != t.colors.size()) {
      throw std::invalid_argument("missing multiplicity in sequence: " + text);
    }
    // longest color symbol match at position i
    int best = -1;
    size_t best_len = 0;
    for (int c = 0; c < table.size(); ++c) {
      const std::string& sym = table.symbol(c);
      if (sym.size() > best_len && text.compare(i, sym.size(), sym) == 0) {
        best = c;
        best_len = sym.size();
      }
    }
    if (best < 0) throw std::invalid_argument("unknown color in sequence: " + text);
    t.colors.push_back(best);
    i += best_len;
  }
  if (t.colors.empty()) throw std::invalid_argument("empty colored sequence");
  return t;
}

bool ColoredSequence::operator<(const ColoredSequence& o) const {
  // Compare the alternating flattening (c0, m1, c1, ...).
  size_t i = 0;
  for (;; ++i) {
    if (i == colors.size() || i == o.colors.size()) return colors.size() < o.colors.size();
    if (colors[i] != o.colors[i]) return colors[i] < o.colors[i];
    if (i < mults.size() && i < o.mults.size() && mults[i] != o.mults[i])
      return mults[i] < o.mults[i];
    if (i == mults.size() && i < o.mults.size()) return true;
    if (i < mults.size() && i == o.mults.size()) return false;
  }
}

bool fv_leq(const FeatureVector& a, const FeatureVector& b) {
  if (a.def > b.def) return false;
  for (const auto& [t, v] : a.counts)
    if (v > b.at(t)) return false;
  for (const auto& [t, v] : b.counts)
    if (a.at(t) > v) return false;
  return true;
}

ColoredSequence gamma(const ChemicalGraph& g, const std::vector<int>& path) {
  if (path.empty()) throw std::invalid_argument("gamma: empty path");
  ColoredSequence t;
  std::vector<char> seen(g.n(), 0);
  for (size_t i = 0; i < path.size(); ++i) {
    int v = path[i];
    if (seen[v]) throw std::invalid_argument("gamma: repeated vertex");
    seen[v] = 1;
    if (i > 0) {
      int m = g.mult(path[i - 1], v);
      if (m == 0) throw std::invalid_argument("gamma: consecutive vertices not adjacent");
      t.mults.push_back(m);
    }
    t.colors.push_back(g.color(v));
  }
  return t;
}

std::int64_t frq(const ColoredSequence& t, const ChemicalGraph& g) {
  std::int64_t count = 0;
  int k = t.length();
  std::vector<char> used(g.n(), 0);
  std::function<void(int, int)> extend = [&](int v, int pos) {
    if (pos == k) {
      ++count;
      return;
    }
    used[v] = 1;
    for (const auto& [w, m] : g.neighbors(v))
      if (!used[w] && m == t.mults[pos] && g.color(w) == t.colors[pos + 1]) extend(w, pos + 1);
    used[v] = 0;
  };
  for (int v = 0; v < g.n(); ++v)
    if (g.color(v) == t.colors[0]) extend(v, 0);
  return count;
}

FeatureVector feature_vector(const ChemicalGraph& g, int level) {
  if (level < 0) throw std::invalid_argument("feature level must be >= 0");
  FeatureVector f;
  f.level = level;
  std::vector<char> used(g.n(), 0);
  ColoredSequence t;
  std::function<void(int)> extend = [&](int v) {
    f.counts[t] += 1;
    if (t.length() == level) return;
    used[v] = 1;
    for (const auto& [w, m] : g.neighbors(v)) {
      if (used[w]) continue;
      t.mults.push_back(m);
      t.colors.push_back(g.color(w));
      extend(w);
      t.mults.pop_back();
      t.colors.pop_back();
    }
    used[v] = 0;
  };
  for (int v = 0; v < g.n(); ++v) {
    t.colors = {g.color(v)};
    t.mults.clear();
    extend(v);
  }
  return f;
}

FeatureVector relax_lower(const FeatureVector& g) {
  FeatureVector r;
  r.level = g.level;
  r.def = 0;
  for (const auto& [t, v] : g.counts) {
    if (t.length() == 0) {
      r.counts[t] = v;
    } else if (t.length() == 1) {
      std::int64_t drop = (t.colors[0] == t.colors[1]) ? 2 : 1;
      std::int64_t nv = std::max<std::int64_t>(0, v - drop);
      if (nv > 0) r.counts[t] = nv;
    }
    // longer entries become 0 (absent)
  }
  return r;
}

bool feasible(const ChemicalGraph& g, const FeatureVector& lo, const FeatureVector& hi) {
  for (int v = 0; v < g.n(); ++v)
    if (residual_degree(g, v) < 0) return false;
  FeatureVector f = feature_vector(g, std::max(lo.level, hi.level));
  return fv_leq(lo, f) && fv_leq(f, hi);
}

bool upper_ok(const ChemicalGraph& g, const FeatureVector& hi) {
  FeatureVector f = feature_vector(g, hi.level);
  return fv_leq(f, hi);
}

namespace {

// True if every rooted path of g with length in [min_len, max_len] has its
// sequence in the set; with fail_longer, any path longer than max_len fails.
bool paths_covered(const ChemicalGraph& g, const std::set<ColoredSequence>& paths, int min_len,
                   int max_len, bool fail_longer) {
  std::vector<char> used(g.n(), 0);
  ColoredSequence t;
  bool ok = true;
  std::function<void(int)> extend = [&](int v) {
    if (!ok) return;
    int len = t.length();
    if (len >= min_len && len <= max_len && !paths.count(t)) {
      ok = false;
      return;
    }
    if (len > max_len) {
      if (fail_longer) ok = false;
      return;
    }
    used[v] = 1;
    for (const auto& [w, m] : g.neighbors(v)) {
      if (used[w]) continue;
      t.mults.push_back(m);
      t.colors.push_back(g.color(w));
      extend(w);
      t.mults.pop_back();
      t.colors.pop_back();
      if (!ok) break;
    }
    used[v] = 0;
  };
  for (int v = 0; v < g.n() && ok; ++v) {
    t.colors = {g.color(v)};
    t.mults.clear();
    extend(v);
  }
  return ok;
}

}  // namespace

bool eulf_ok(const ChemicalGraph& g, const PathSpec& spec) {
  for (const ColoredSequence& t : spec.paths) {
    std::int64_t f = frq(t, g);
    if (f < spec.lower.at(t) || f > spec.upper.at(t)) return false;
  }
  switch (spec.mode) {
    case CoverageMode::None:
      return true;
    case CoverageMode::A:
      // every rooted path with |P| <= L must be in the set
      return paths_covered(g, spec.paths, 0, spec.cover_len, false);
    case CoverageMode::P:
      // every rooted path with |P| > L must be in the set; anything longer
      // than N cannot be, so such paths fail outright
      return paths_covered(g, spec.paths, spec.cover_len + 1, spec.max_len, true);
  }
  return true;
}

}  // namespace chemenum
