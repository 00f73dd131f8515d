#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chemenum/chemical_graph.hpp"

namespace chemenum {

// Line-oriented graph block format:
//   graph <id>
//   n <count>
//   v <index> <color-symbol>     one line per vertex, 1-based index
//   e <u> <v> <mult>             one line per adjacent pair, u < v
//   end
struct GraphBlock {
  std::string id;
  ChemicalGraph graph;
};

void write_graph(std::ostream& os, const ChemicalGraph& g, const std::string& id);

// Reads all graph blocks from the stream. Rejects self-loops, duplicate
// pairs, unknown colors and valence overflow with std::runtime_error.
std::vector<GraphBlock> read_graphs(std::istream& is, std::shared_ptr<const ColorTable> table,
                                    int max_mult);

std::vector<GraphBlock> read_graphs_file(const std::string& path,
                                         std::shared_ptr<const ColorTable> table, int max_mult);

}  // namespace chemenum
