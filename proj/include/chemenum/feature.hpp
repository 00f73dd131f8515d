#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chemenum/chemical_graph.hpp"

namespace chemenum {

// Alternating color/multiplicity sequence (c0, m1, c1, ..., mK, cK) of
// length K = number of multiplicities. Text form concatenates color symbols
// and single-digit multiplicities, e.g. "C1N2C"; a bare symbol is length 0.
struct ColoredSequence {
  std::vector<int> colors;
  std::vector<int> mults;  // size == colors.size() - 1

  int length() const { return static_cast<int>(mults.size()); }

  ColoredSequence reversed() const;

  std::string encode(const ColorTable& table) const;
  static ColoredSequence parse(const std::string& text, const ColorTable& table);

  bool operator==(const ColoredSequence& o) const {
    return colors == o.colors && mults == o.mults;
  }
  bool operator<(const ColoredSequence& o) const;
};

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

// Sparse map from colored sequence to count. `def` is the value of absent
// keys: 0 for frequency vectors and lower bounds, kUnbounded for upper
// bounds that constrain only their explicit entries.
struct FeatureVector {
  std::map<ColoredSequence, std::int64_t> counts;
  int level = 0;
  std::int64_t def = 0;

  std::int64_t at(const ColoredSequence& t) const {
    auto it = counts.find(t);
    return it == counts.end() ? def : it->second;
  }
  void set(const ColoredSequence& t, std::int64_t v) { counts[t] = v; }
};

// a <= b componentwise over the whole sequence space (explicit keys plus
// the defaults).
bool fv_leq(const FeatureVector& a, const FeatureVector& b);

// Colored sequence of a concrete path. Throws if consecutive vertices are
// nonadjacent or a vertex repeats.
ColoredSequence gamma(const ChemicalGraph& g, const std::vector<int>& path);

// Number of ordered sequences of |t|+1 distinct, consecutively adjacent
// vertices whose colored sequence equals t. Each undirected path is counted
// once per orientation; length-0 sequences count vertices of that color.
std::int64_t frq(const ColoredSequence& t, const ChemicalGraph& g);

// Complete feature vector of level K: all nonzero counts of sequences with
// length <= K.
FeatureVector feature_vector(const ChemicalGraph& g, int level);

// One edge-removal relaxation step of a lower bound: length-0 entries kept,
// a length-1 entry (c, m, c') drops by 1 (c != c') or 2 (c = c') and floors
// at 0, all longer entries become 0.
FeatureVector relax_lower(const FeatureVector& g);

// g_lo <= f(G) <= g_hi componentwise, and res(v) >= 0 everywhere (the
// latter is a ChemicalGraph invariant, re-asserted here).
bool feasible(const ChemicalGraph& g, const FeatureVector& lo, const FeatureVector& hi);

// f(G) <= g_hi. Adding edges between nonadjacent pairs never decreases any
// frequency, so a failure here prunes the whole supergraph branch.
bool upper_ok(const ChemicalGraph& g, const FeatureVector& hi);

enum class CoverageMode { A, P, None };

// Path-frequency instance over a path set. `paths` holds sequences of
// length <= N; lower/upper bound only those entries. Mode A requires every
// rooted path of length <= L to have its sequence in `paths`; mode P
// requires the same of every rooted path of length > L.
struct PathSpec {
  std::set<ColoredSequence> paths;
  FeatureVector lower;  // def 0
  FeatureVector upper;  // def kUnbounded
  int max_len = 0;      // N
  int cover_len = 0;    // L
  CoverageMode mode = CoverageMode::None;
  int relax = 0;        // s
};

// Coverage constraint of the mode plus the frequency bounds over `paths`.
bool eulf_ok(const ChemicalGraph& g, const PathSpec& spec);

}  // namespace chemenum
