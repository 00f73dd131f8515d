#include "chemenum/graph_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace chemenum {

void write_graph(std::ostream& os, const ChemicalGraph& g, const std::string& id) {
  os << "graph " << id << "\n";
  os << "n " << g.n() << "\n";
  for (int v = 0; v < g.n(); ++v)
    os << "v " << v + 1 << " " << g.table().symbol(g.color(v)) << "\n";
  for (auto [u, v, m] : g.pairs())
    os << "e " << u + 1 << " " << v + 1 << " " << m << "\n";
  os << "end\n";
}

namespace {

[[noreturn]] void fail(int lineno, const std::string& msg) {
  throw std::runtime_error("graph format error at line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

std::vector<GraphBlock> read_graphs(std::istream& is, std::shared_ptr<const ColorTable> table,
                                    int max_mult) {
  std::vector<GraphBlock> out;
  std::string line;
  int lineno = 0;

  std::string cur_id;
  bool in_block = false;
  int n = -1;
  std::vector<int> colors;
  std::vector<char> color_set;
  std::vector<std::tuple<int, int, int>> edges;

  auto finish = [&]() {
    if (n < 0) fail(lineno, "missing n line");
    for (int i = 0; i < n; ++i)
      if (!color_set[i]) fail(lineno, "vertex " + std::to_string(i + 1) + " missing");
    ChemicalGraph g(table, colors, max_mult);
    for (auto [u, v, m] : edges) g = add_edges(g, u, v, m);
    out.push_back({cur_id, std::move(g)});
    in_block = false;
    n = -1;
    colors.clear();
    color_set.clear();
    edges.clear();
  };

  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    if (tok[0] == '#') continue;
    if (tok == "graph") {
      if (in_block) fail(lineno, "nested graph block");
      if (!(ss >> cur_id)) fail(lineno, "graph line needs an id");
      in_block = true;
    } else if (!in_block) {
      fail(lineno, "content outside a graph block");
    } else if (tok == "n") {
      if (n >= 0) fail(lineno, "duplicate n line");
      if (!(ss >> n) || n < 1) fail(lineno, "bad vertex count");
      colors.assign(n, -1);
      color_set.assign(n, 0);
    } else if (tok == "v") {
      int idx;
      std::string sym;
      if (n < 0) fail(lineno, "v before n");
      if (!(ss >> idx >> sym)) fail(lineno, "bad v line");
      if (idx < 1 || idx > n) fail(lineno, "vertex index out of range");
      if (color_set[idx - 1]) fail(lineno, "duplicate vertex index");
      int id = table->find(sym);
      if (id < 0) fail(lineno, "unknown color: " + sym);
      colors[idx - 1] = id;
      color_set[idx - 1] = 1;
    } else if (tok == "e") {
      int u, v, m;
      if (n < 0) fail(lineno, "e before n");
      if (!(ss >> u >> v >> m)) fail(lineno, "bad e line");
      if (u < 1 || u > n || v < 1 || v > n) fail(lineno, "edge endpoint out of range");
      if (u == v) fail(lineno, "self-loop");
      if (u > v) fail(lineno, "edge endpoints must satisfy u < v");
      for (auto [a, b, q] : edges) {
        (void)q;
        if (a == u - 1 && b == v - 1) fail(lineno, "duplicate pair");
      }
      if (m < 1 || m > max_mult) fail(lineno, "multiplicity out of range");
      edges.emplace_back(u - 1, v - 1, m);
    } else if (tok == "end") {
      try {
        finish();
      } catch (const std::invalid_argument& e) {
        fail(lineno, e.what());  // valence overflow and similar
      }
    } else {
      fail(lineno, "unknown directive: " + tok);
    }
  }
  if (in_block) fail(lineno, "unterminated graph block");
  return out;
}

std::vector<GraphBlock> read_graphs_file(const std::string& path,
                                         std::shared_ptr<const ColorTable> table, int max_mult) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open graph file: " + path);
  return read_graphs(f, table, max_mult);
}

}  // namespace chemenum
