#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chemenum/graph_io.hpp"
#include "chemenum/iso_oracle.hpp"
#include "chemenum/pipeline.hpp"

using namespace chemenum;

namespace {

Stage parse_stage(const std::string& s) {
  if (s == "tree") return Stage::Tree;
  if (s == "mono") return Stage::Mono;
  if (s == "biblock") return Stage::BiBlock;
  if (s == "all") return Stage::All;
  throw CLI::ValidationError("--stage must be tree|mono|biblock|all");
}

ShapeClass parse_shape(const std::string& s) {
  if (s == "multitree") return ShapeClass::MultiTree;
  if (s == "monocyclic") return ShapeClass::Monocyclic;
  if (s == "biblock") return ShapeClass::BiBlock2Aug;
  if (s == "shared") return ShapeClass::Shared2Aug;
  throw CLI::ValidationError("--shape must be multitree|monocyclic|biblock|shared");
}

// C4N2O1 or C4N2O -> color multiset (count 1 may be omitted)
std::vector<int> parse_formula(const std::string& f, const ColorTable& table) {
  std::vector<int> atoms;
  size_t i = 0;
  while (i < f.size()) {
    int best = -1;
    size_t best_len = 0;
    for (int c = 0; c < table.size(); ++c) {
      const std::string& sym = table.symbol(c);
      if (sym.size() > best_len && f.compare(i, sym.size(), sym) == 0) {
        best = c;
        best_len = sym.size();
      }
    }
    if (best < 0) throw std::runtime_error("formula: unknown symbol at '" + f.substr(i) + "'");
    i += best_len;
    int count = 0;
    while (i < f.size() && f[i] >= '0' && f[i] <= '9') count = count * 10 + (f[i++] - '0');
    if (count == 0) count = 1;
    for (int k = 0; k < count; ++k) atoms.push_back(best);
  }
  return atoms;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"duplicate-free enumeration of chemical multigraphs under path-frequency bounds"};
  app.require_subcommand(1);

  // ---- enumerate ----
  auto* enumerate = app.add_subcommand("enumerate", "run the tree/mono/biblock pipeline");
  std::string spec_path, stage_str = "all", input_path, output_path;
  long long limit = -1;
  double time_limit = 60.0;
  bool count_only = false, oracle_verify = false;
  int workers = 1;
  enumerate->add_option("--spec", spec_path, "problem spec file")->required();
  enumerate->add_option("--stage", stage_str, "tree|mono|biblock|all (default all)");
  enumerate->add_option("--input", input_path, "seed graphs for the first stage of the chain");
  enumerate->add_option("--output", output_path, "output file (default stdout)");
  enumerate->add_flag("--count-only", count_only, "suppress graph blocks, print stats only");
  enumerate->add_option("--limit", limit, "stop after this many graphs");
  enumerate->add_option("--time-limit", time_limit, "wall-clock limit in seconds (default 60)");
  enumerate->add_option("--workers", workers, "worker threads (default 1)");
  enumerate->add_flag("--oracle-verify", oracle_verify,
                      "check the output against the brute-force oracle (small instances)");

  // ---- oracle ----
  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration for ground truth");
  std::string o_shape = "biblock", o_formula, o_spec_path, o_output;
  int o_d = 1;
  oracle->add_option("--shape", o_shape, "multitree|monocyclic|biblock|shared");
  oracle->add_option("--formula", o_formula, "atom multiset, e.g. C6 or C4N2O1");
  oracle->add_option("--d", o_d, "maximum bond multiplicity");
  oracle->add_option("--spec", o_spec_path, "optional spec file with bounds (implies formula)");
  oracle->add_option("--output", o_output, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) {
      RunConfig cfg;
      cfg.spec = read_spec_file(spec_path);
      cfg.stage = parse_stage(stage_str);
      cfg.input_path = input_path;
      cfg.output_path = output_path;
      cfg.limit = limit;
      cfg.time_limit_s = time_limit;
      cfg.count_only = count_only;
      cfg.oracle_verify = oracle_verify;
      cfg.workers = workers;
      RunResult res = run(cfg);
      std::ofstream file;
      write_result(open_output(file, output_path), res, count_only);
      return res.exit_code;
    }
    if (*oracle) {
      OracleBounds ob;
      std::vector<int> atoms;
      std::shared_ptr<const ColorTable> table;
      int d = o_d;
      if (!o_spec_path.empty()) {
        ProblemSpec spec = read_spec_file(o_spec_path);
        table = spec.table;
        d = spec.d;
        ob.lower = spec.path_spec.lower;
        ob.upper = spec.path_spec.upper;
        for (auto [c, cnt] : spec.atom_counts())
          for (int i = 0; i < cnt; ++i) atoms.push_back(c);
      } else {
        auto t = std::make_shared<ColorTable>();
        t->add("O", 2);
        t->add("N", 3);
        t->add("C", 4);
        table = t;
      }
      if (!o_formula.empty()) {
        atoms = parse_formula(o_formula, *table);
      }
      if (atoms.empty()) throw std::runtime_error("oracle: need --formula or a spec with atoms");
      IsoClassSet set =
          enumerate_all(parse_shape(o_shape), atoms, table, d, o_spec_path.empty() ? nullptr : &ob);
      std::ofstream file;
      std::ostream& os = open_output(file, o_output);
      int i = 0;
      for (const ChemicalGraph& g : set.graphs()) write_graph(os, g, std::to_string(++i));
      os << "# classes " << set.size() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return 0;
}
