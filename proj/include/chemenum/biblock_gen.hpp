#pragma once

#include <vector>

#include "chemenum/feature.hpp"
#include "chemenum/rooted_tree.hpp"

namespace chemenum {

// Cycle + pendent-tree decomposition of a monocyclic graph. Every vertex
// belongs to exactly one pendent tree, rooted at a cycle vertex; parent,
// depth and subtree size are taken within that rooting.
struct MonocyclicView {
  ChemicalGraph g;
  std::vector<int> cycle;
  std::vector<int> root_of;   // r(v, G): the cycle vertex whose pendent tree holds v
  std::vector<int> parent;    // within the pendent tree; -1 for cycle vertices
  std::vector<int> depth;     // 0 for cycle vertices
  std::vector<int> sub_size;  // |G<v>|
  std::vector<std::vector<int>> kids;
  int big_root = -1;  // cycle vertex with 2*|G<v>| >= n, or -1 (unique if any)

  int n() const { return g.n(); }
  bool on_cycle(int v) const { return parent[v] < 0; }
};

MonocyclicView decompose(const ChemicalGraph& g);

// Two-cycle decomposition of a bi-block graph: the cycles, their anchors,
// the connecting path (a single vertex when the cycles share one), the
// block sizes and the minimum anchor-pair multiplicity.
struct BiBlockView {
  ChemicalGraph g;
  std::vector<int> cycle_a, cycle_b;  // vertex lists; anchors first
  int anc_a = -1, anc_b = -1;
  std::vector<int> path;  // anc_a ... anc_b
  int q_a = 0, q_b = 0;   // |V(Q(C, H))| for each cycle
  std::vector<std::pair<int, int>> anchor_pairs;  // 4 pairs, 2 per cycle
  int mma = 0;

  int n() const { return g.n(); }
};

BiBlockView analyze_biblock(const ChemicalGraph& g);

// The pendent trees every child of G can have, canonicalized in place: the
// pendent trees G<u> of all cycle vertices and of every vertex of the big
// pendent tree, plus the trimmed trees T_G(u) (the parent's pendent tree
// with u's branch removed) for u inside the big tree. Empty when no pendent
// tree reaches n/2 vertices.
std::vector<RootedOrderedTree> pendent_family(const MonocyclicView& view);

// Per-graph context for code comparisons: one ranking over the closure of
// the pendent family, plus the signatures of G<u> and T_G(u) per vertex.
struct PendantContext {
  TreeRanking ranking;
  std::vector<Signature> sub;  // sigma(G<u>) by vertex
  std::vector<Signature> tg;   // sigma(T_G(u)) by vertex, big tree only
};

PendantContext make_pendant_context(const MonocyclicView& view);

// Flattened heuristic cycle codes (complement block size, cycle length,
// anchor code, connecting-path code, cycle code) of the new and old cycle
// of G + q*xy; comparing the two flat vectors lexicographically compares
// the codes.
struct CandidateCodes {
  std::vector<int> star_new;  // code* of the cycle through the new edge
  std::vector<int> star_old;
  std::vector<int> path_fwd;  // code_P(x, y, ..., other anchor-pair vertex)
  std::vector<int> path_rev;
};

CandidateCodes candidate_codes(const MonocyclicView& view, const PendantContext& ctx, int x, int y,
                               int q);

// Potential edge set: ancestor-descendant nonadjacent pairs inside the big
// pendent tree whose new cycle would not beat the old one on (complement
// block size, cycle length). Pairs are returned with x the ancestor.
std::vector<std::pair<int, int>> potential_edges(const MonocyclicView& view);

// Whether G + q*xy is a child of G: the new cycle's heuristic code must not
// exceed the old one's and the orientation starting with the new edge must
// not exceed its reverse. Precondition: y is a strict descendant of x in
// the big pendent tree and the pair is nonadjacent.
bool child_check(const MonocyclicView& view, const PendantContext& ctx, int x, int y, int q);

// The parent of a bi-block graph: delete the edge between the anchor pair
// of the code-minimal cycle in its code-minimal orientation. Returns the
// monocyclic parent and the deleted pair. Exact ties between the two
// cycles or orientations fall back to vertex labels; used by tests and the
// oracle only.
std::pair<ChemicalGraph, std::pair<int, int>> parent_of(const ChemicalGraph& biblock);

struct BiBlockGenStats {
  long long candidates = 0;
  long long rejected_child = 0;
  long long pruned_upper = 0;
  long long emitted = 0;
};

// All children of G: potential edges intersected with the admissible pairs
// of the big pendent tree, each multiplicity up to the residual degrees,
// kept when the child check passes and the upper bound holds. Duplicate
// free across any set of pairwise non-isomorphic monocyclic inputs.
std::vector<ChemicalGraph> generate_children(const MonocyclicView& view, const FeatureVector& hi,
                                             int d, BiBlockGenStats* stats = nullptr);

}  // namespace chemenum
