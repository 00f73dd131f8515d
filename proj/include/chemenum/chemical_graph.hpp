#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "chemenum/color_table.hpp"

namespace chemenum {

enum class ShapeClass { MultiTree, Monocyclic, BiBlock2Aug, Shared2Aug, Other };

const char* shape_name(ShapeClass s);

// A colored labeled multigraph without self-loops. Vertices are dense ids
// 0..n-1; each unordered pair carries one multiplicity in [1,d]. Values are
// immutable after construction: edits return new graphs, which keeps the
// backtracking generators free of aliasing bugs.
class ChemicalGraph {
public:
  ChemicalGraph() = default;
  ChemicalGraph(std::shared_ptr<const ColorTable> table, std::vector<int> colors, int max_mult);

  int n() const { return static_cast<int>(colors_.size()); }
  int max_mult() const { return max_mult_; }
  const ColorTable& table() const { return *table_; }
  std::shared_ptr<const ColorTable> table_ptr() const { return table_; }

  int color(int v) const { return colors_.at(v); }
  int valence(int v) const { return table_->valence(colors_.at(v)); }
  int degree(int v) const { return deg_.at(v); }

  // Sorted by neighbor id; each entry is (neighbor, multiplicity).
  const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_.at(v); }

  int mult(int u, int v) const;
  bool adjacent(int u, int v) const { return mult(u, v) > 0; }

  // Number of adjacent vertex pairs (multi-edges count once).
  int pair_count() const;

  // All adjacent pairs (u, v, mult) with u < v, ordered by (u, v).
  std::vector<std::tuple<int, int, int>> pairs() const;

  bool connected() const;

  ChemicalGraph with_mult_unchecked(int u, int v, int q) const;  // internal/oracle use

  friend int residual_degree(const ChemicalGraph& g, int v);
  friend ChemicalGraph add_edges(const ChemicalGraph& g, int x, int y, int q);
  friend ChemicalGraph remove_pair_edges(const ChemicalGraph& g, int x, int y);

private:
  void check_vertex(int v) const;

  std::shared_ptr<const ColorTable> table_;
  std::vector<int> colors_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<int> deg_;
  int max_mult_ = 1;
};

// val(col(v)) - deg(v); the implicit hydrogen count. Nonnegative on any
// graph built through the checked edit operations.
int residual_degree(const ChemicalGraph& g, int v);

// Returns a copy of g with q parallel edges between the nonadjacent pair
// {x, y}. Throws on self-loops, existing adjacency, or valence overflow
// (q > min{d, res(x), res(y)}).
ChemicalGraph add_edges(const ChemicalGraph& g, int x, int y, int q);

// Returns a copy of g with all edges between x and y removed. Throws if the
// pair is not adjacent. The result may be disconnected.
ChemicalGraph remove_pair_edges(const ChemicalGraph& g, int x, int y);

// Classifies a connected graph by adjacent-pair count and, for the count
// n+1, by whether the two independent cycles of the simple skeleton are
// edge-disjoint. Multi-edges never count as cycles.
ShapeClass classify(const ChemicalGraph& g);

// The unique skeleton cycle of a monocyclic graph, normalized to start at
// the lowest-labeled cycle vertex and run toward its lower-labeled cycle
// neighbor. The normalization is an internal convention only.
std::vector<int> cycle_of(const ChemicalGraph& g);

}  // namespace chemenum
