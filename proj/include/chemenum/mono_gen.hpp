#pragma once

#include <vector>

#include "chemenum/feature.hpp"
#include "chemenum/rooted_tree.hpp"

namespace chemenum {

// Ordered nonadjacent vertex pairs (u, v) of a canonical tree, dfs(u) <
// dfs(v), passing the admissibility conditions: no copy flag on the path
// from the lca to the root, none on the paths from u and v up to (but
// excluding, on the v side) the children of the lca, and when the v-side
// child duplicates its left sibling, that sibling must be the u-side child
// and the pair must not be the mirror image of a smaller one. Joining
// exactly these pairs produces every cycle closure of the tree once.
//
// Returned as pairs of original vertex ids, sorted by dfs position.
std::vector<std::pair<int, int>> admissible_pairs(const RootedOrderedTree& t);

// Sizes of the pendent trees of T + xy along its cycle, computed from the
// rooted subtree sizes without building the graph: a leaf of the x,y-path
// keeps its whole subtree, an inner vertex loses the branch toward the
// path, and the path root keeps everything outside its path children.
// Returns (original vertex id, size) along the path.
std::vector<std::pair<int, int>> pendent_sizes_after_addition(const RootedOrderedTree& t, int x,
                                                              int y);

// Whether T + xy has a pendent tree with at least n/2 vertices; only such
// monocyclic graphs can have bi-block children.
bool has_big_pendent(const RootedOrderedTree& t, int x, int y);

// Same predicate for a tree rooted at its centroid, using the centroid
// shortcuts: with a unicentroid root only the path-root case needs the size
// formula; with a bicentroid the answer depends only on whether the
// centroid edge lies on the x,y-path and whether x or y is an endpoint.
bool has_big_pendent_centroid(const RootedOrderedTree& t, int x, int y);

struct MonoGenStats {
  long long candidates = 0;
  long long pruned_upper = 0;
  long long pruned_restrict = 0;
  long long emitted = 0;
};

// All monocyclic graphs T + q*xy over admissible pairs and valid q, pruned
// by the upper bound and optionally restricted to graphs with a big pendent
// tree. Pairwise non-isomorphic for a single T; the caller applies the
// final lower-bound filter and cross-tree deduplication.
std::vector<ChemicalGraph> generate_monocyclic(const ChemicalGraph& tree, const FeatureVector& hi,
                                               int d, bool restrict_big,
                                               MonoGenStats* stats = nullptr);

// Deterministic root for admissible-pair generation: the unicentroid, or
// the bicentroid endpoint with the larger rooted signature.
int generation_root(const ChemicalGraph& tree);

// Canonical key of a monocyclic graph: minimum over both traversals of the
// cycle of the per-vertex pendent signatures and cycle multiplicities.
// Equal keys iff isomorphic; used to deduplicate across seed trees.
std::vector<int> monocyclic_key(const ChemicalGraph& g);

struct TreeSeedStats {
  long long grown = 0;
  long long pruned_upper = 0;
  long long kept = 0;
};

// Exhaustive multi-tree construction over a fixed color multiset: grow by
// attaching leaves, deduplicate by unrooted canonical signature, prune with
// the upper bound. Emits the trees of full size in signature order.
std::vector<ChemicalGraph> tree_seeds(std::shared_ptr<const ColorTable> table,
                                      const std::vector<int>& color_multiset, int d,
                                      const FeatureVector& hi, TreeSeedStats* stats = nullptr);

}  // namespace chemenum
