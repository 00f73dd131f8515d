#pragma once

#include <map>
#include <string>
#include <vector>

#include "chemenum/feature.hpp"
#include "chemenum/rooted_tree.hpp"

namespace chemenum {

// Ground-truth brute force. Everything here is deliberately simple and
// independent of the canonical-form machinery it certifies.

// Color- and multiplicity-preserving bijection test by backtracking with
// degree/color partition pruning. Exact; intended for n up to ~12.
bool isomorphic(const ChemicalGraph& a, const ChemicalGraph& b);

// Isomorphism of rooted multi-trees that fixes the roots.
bool rooted_isomorphic(const RootedTree& a, const RootedTree& b);

// A list of pairwise non-isomorphic representatives, bucketed by a cheap
// invariant key so inserts stay fast.
class IsoClassSet {
public:
  // Returns true if g was new (not isomorphic to any stored graph).
  bool insert(const ChemicalGraph& g);
  bool contains(const ChemicalGraph& g) const { return find(g) >= 0; }
  // Index of the stored representative isomorphic to g, or -1.
  int find(const ChemicalGraph& g) const;
  const std::vector<ChemicalGraph>& graphs() const { return graphs_; }
  int size() const { return static_cast<int>(graphs_.size()); }

private:
  std::vector<int> bucket_key(const ChemicalGraph& g) const;
  std::vector<ChemicalGraph> graphs_;
  std::map<std::vector<int>, std::vector<int>> buckets_;
};

struct OracleBounds {
  FeatureVector lower;
  FeatureVector upper;
  const PathSpec* eulf = nullptr;  // optional full instance check
};

// Exhaustive enumeration of all connected graphs of the given shape over a
// fixed color multiset, by assigning multiplicities over the upper
// triangular pair matrix with early valence pruning; deduplicated by
// isomorphic(). Guarded to at most 9 atoms.
IsoClassSet enumerate_all(ShapeClass shape, const std::vector<int>& color_multiset,
                          std::shared_ptr<const ColorTable> table, int d,
                          const OracleBounds* bounds = nullptr);

struct RepresentsReport {
  std::vector<int> missing;     // indices into truth with no candidate match
  std::vector<int> extra;       // candidate indices matching no truth class
  std::vector<int> duplicates;  // candidate indices isomorphic to an earlier candidate
  bool ok() const { return missing.empty() && extra.empty() && duplicates.empty(); }
  std::string to_string() const;
};

// Verifies that `candidate` represents `truth`: a bijection between iso
// classes in both directions and no internal duplicates.
RepresentsReport represents(const std::vector<ChemicalGraph>& candidate, const IsoClassSet& truth);

}  // namespace chemenum
