#pragma once

#include <map>
#include <string>
#include <vector>

#include "chemenum/chemical_graph.hpp"

namespace chemenum {

enum class Ord { Less, Equal, Greater };

// Standard lexicographic order: a proper prefix is smaller, otherwise the
// first differing element decides. Colors take part as their table ids, so
// every comparison reduces to integers.
Ord lex_compare(const std::vector<int>& a, const std::vector<int>& b);

// Signature of a rooted ordered multi-tree: delta interleaves the color and
// depth of each vertex in DFS order, mul lists the multiplicity of each
// non-first vertex to its parent. For an edge-rooted tree both endpoints of
// the root edge sit at depth 0 and the root-edge multiplicity takes the
// second endpoint's slot in mul, which keeps signatures injective across
// vertex- and edge-rooted trees.
struct Signature {
  std::vector<int> delta;
  std::vector<int> mul;

  bool operator==(const Signature& o) const { return delta == o.delta && mul == o.mul; }
  bool operator<(const Signature& o) const;

  std::string delta_string(const ColorTable& table) const;  // e.g. "C0C1N2"
  std::string mul_string() const;                           // e.g. "2,1,1"

  // delta followed by a separator smaller than every element, then mul;
  // the flat order equals the pair order.
  std::vector<int> flat() const;
};

Ord sig_compare(const Signature& a, const Signature& b);

// An ordered rooted multi-tree over a subset of a graph's vertices, stored
// by DFS index (preorder, children left to right). For an edge-rooted tree
// the second root has depth 0 and its parent slot holds the root edge.
struct RootedOrderedTree {
  int n = 0;
  bool edge_rooted = false;
  int second_root = -1;  // dfs index of the second root-edge endpoint

  std::vector<int> color;       // by dfs index
  std::vector<int> depth;
  std::vector<int> parent;      // dfs index, -1 for the first root
  std::vector<int> mul_parent;  // 0 for the first root
  std::vector<int> size;        // subtree size |T_v|
  std::vector<std::vector<int>> children;
  std::vector<int> orig;    // dfs index -> vertex id in the source graph
  std::vector<int> dfs_of;  // vertex id -> dfs index (-1 if absent)

  Signature signature() const;

  bool tree_adjacent(int a, int b) const;  // parent/child or the root edge
};

// A rooted multi-tree handed around as a value: the tree as a graph plus
// its root vertex.
struct RootedTree {
  ChemicalGraph g;
  int root = 0;
};

// Canonical (left-heavy) ordering of the subtree hanging below `root`:
// children of every vertex are ordered so that the concatenated delta code
// is lexicographically maximum, with the multiplicity code as tie-break.
// `avoid` restricts the tree to the component of root in g - avoid (pass -1
// for the whole multi-tree).
RootedOrderedTree canonicalize(const ChemicalGraph& g, int root, int avoid = -1);

// Same, but the tree is the component of `root` inside the allowed vertex
// set. Used to canonicalize pendent trees in place.
RootedOrderedTree canonicalize_masked(const ChemicalGraph& g, int root,
                                      const std::vector<char>& mask);

// Canonical form of a tree rooted at the edge {u, v}: both halves are
// canonicalized and the half with the larger signature becomes the left.
RootedOrderedTree canonicalize_edge(const ChemicalGraph& g, int u, int v);

// Canonical form of an unrooted multi-tree, rooted at its centroid (vertex
// or edge).
RootedOrderedTree canonicalize_unrooted(const ChemicalGraph& g);

// Signatures of every rooted subtree T_v, computed bottom-up in DFS-post
// order by shifting and sorting child codes. Works on any ordered tree; the
// result does not depend on the stored child order.
std::vector<Signature> subtree_signatures(const RootedOrderedTree& t);

struct Centroid {
  int a = -1;
  int b = -1;  // -1 for a unicentroid
  bool is_edge() const { return b >= 0; }
};

Centroid centroid(const ChemicalGraph& tree);

struct LcaGua {
  int lca = -1;
  int gua_u = -1;  // child of lca toward u; -1 when lca == u
  int gua_v = -1;  // child of lca toward v; -1 when lca == v
};

// Least common ancestor of two distinct vertices (dfs indices) and the
// children of the lca on each side.
LcaGua lca_gua(const RootedOrderedTree& t, int u, int v);

// copy(v) = 1 iff v has a left sibling whose edge-attached subtree is
// rooted-isomorphic to v's, i.e. equal multiplicity to the parent and equal
// subtree signature. Requires a canonical tree, where equal siblings are
// consecutive.
std::vector<int> copy_flags(const RootedOrderedTree& t);

// Rank function over the subtree closure of a family of rooted trees:
// rank(T1) < rank(T2) iff sigma(T1) < sigma(T2), equal ranks iff rooted
// isomorphic. Lookup is by signature and covers every rooted subtree of
// every family member.
class TreeRanking {
public:
  static TreeRanking build(const std::vector<RootedTree>& family);
  static TreeRanking build_ordered(const std::vector<RootedOrderedTree>& family);

  int rank(const Signature& s) const;
  int size() const { return static_cast<int>(ranks_.size()); }

private:
  static TreeRanking from_signatures(std::vector<Signature> all);
  std::map<Signature, int> ranks_;
};

// Sorts a collection of integer sequences lexicographically ascending and
// returns the permutation of indices. The radix variant buckets by column
// instead of comparing pairs; both orders agree.
std::vector<int> lex_sort_indices(const std::vector<std::vector<int>>& seqs);
std::vector<int> lex_sort_indices_radix(const std::vector<std::vector<int>>& seqs);

}  // namespace chemenum
