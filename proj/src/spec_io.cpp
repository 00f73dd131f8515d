#include "chemenum/spec_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace chemenum {

std::vector<std::pair<int, int>> ProblemSpec::atom_counts() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [t, v] : path_spec.lower.counts)
    if (t.length() == 0 && path_spec.upper.at(t) == v)
      out.emplace_back(t.colors[0], static_cast<int>(v));
  return out;
}

ProblemSpec read_spec(std::istream& is) {
  auto table = std::make_shared<ColorTable>();
  ProblemSpec spec;
  spec.path_spec.lower.def = 0;
  spec.path_spec.upper.def = kUnbounded;

  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw std::runtime_error("spec error at line " + std::to_string(lineno) + ": " + msg);
  };

  bool colors_done = false;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok) || tok[0] == '#') continue;
    if (tok == "color") {
      std::string sym;
      int val;
      if (!(ss >> sym >> val)) fail("bad color line");
      if (colors_done) fail("color lines must precede path/atom lines");
      table->add(sym, val);
    } else if (tok == "d") {
      if (!(ss >> spec.d) || spec.d < 1) fail("bad d");
    } else if (tok == "K") {
      if (!(ss >> spec.level) || spec.level < 0) fail("bad K");
    } else if (tok == "L") {
      if (!(ss >> spec.path_spec.cover_len) || spec.path_spec.cover_len < 0) fail("bad L");
    } else if (tok == "s") {
      if (!(ss >> spec.path_spec.relax) || spec.path_spec.relax < 0) fail("bad s");
    } else if (tok == "mode") {
      std::string m;
      if (!(ss >> m)) fail("bad mode");
      if (m == "A")
        spec.path_spec.mode = CoverageMode::A;
      else if (m == "P")
        spec.path_spec.mode = CoverageMode::P;
      else if (m == "none")
        spec.path_spec.mode = CoverageMode::None;
      else
        fail("mode must be A, P or none");
    } else if (tok == "atom") {
      std::string sym;
      long long cnt;
      if (!(ss >> sym >> cnt) || cnt < 0) fail("bad atom line");
      colors_done = true;
      ColoredSequence t;
      t.colors = {table->id_or_throw(sym)};
      spec.path_spec.paths.insert(t);
      spec.path_spec.lower.set(t, cnt);
      spec.path_spec.upper.set(t, cnt);
    } else if (tok == "path") {
      std::string seq, lo_s, hi_s;
      if (!(ss >> seq >> lo_s >> hi_s)) fail("bad path line");
      colors_done = true;
      ColoredSequence t = ColoredSequence::parse(seq, *table);
      long long lo = std::stoll(lo_s);
      std::int64_t hi = hi_s == "*" ? kUnbounded : std::stoll(hi_s);
      if (lo < 0 || (hi != kUnbounded && hi < lo)) fail("bad path bounds");
      spec.path_spec.paths.insert(t);
      if (lo > 0) spec.path_spec.lower.set(t, lo);
      if (hi != kUnbounded) spec.path_spec.upper.set(t, hi);
      spec.path_spec.max_len = std::max(spec.path_spec.max_len, t.length());
    } else {
      fail("unknown directive: " + tok);
    }
  }
  if (table->size() == 0) fail("no colors declared");
  spec.table = table;
  spec.path_spec.lower.level = spec.level;
  spec.path_spec.upper.level = spec.level;
  spec.path_spec.max_len = std::max(spec.path_spec.max_len, spec.level);
  // g_a <= g_b and level-0 equality
  if (!fv_leq(spec.path_spec.lower, spec.path_spec.upper))
    throw std::runtime_error("spec error: lower bound exceeds upper bound");
  for (const auto& [t, v] : spec.path_spec.lower.counts)
    if (t.length() == 0 && spec.path_spec.upper.at(t) != v)
      throw std::runtime_error("spec error: length-0 bounds must be equalities");
  return spec;
}

ProblemSpec read_spec_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open spec file: " + path);
  return read_spec(f);
}

void write_spec(std::ostream& os, const ProblemSpec& spec) {
  const ColorTable& tb = *spec.table;
  for (int c = 0; c < tb.size(); ++c)
    os << "color " << tb.symbol(c) << " " << tb.valence(c) << "\n";
  os << "d " << spec.d << "\n";
  os << "K " << spec.level << "\n";
  os << "L " << spec.path_spec.cover_len << "\n";
  os << "mode "
     << (spec.path_spec.mode == CoverageMode::A   ? "A"
         : spec.path_spec.mode == CoverageMode::P ? "P"
                                                  : "none")
     << "\n";
  os << "s " << spec.path_spec.relax << "\n";
  for (const ColoredSequence& t : spec.path_spec.paths) {
    if (t.length() == 0) {
      os << "atom " << tb.symbol(t.colors[0]) << " " << spec.path_spec.lower.at(t) << "\n";
    } else {
      os << "path " << t.encode(tb) << " " << spec.path_spec.lower.at(t) << " ";
      std::int64_t hi = spec.path_spec.upper.at(t);
      if (hi == kUnbounded)
        os << "*\n";
      else
        os << hi << "\n";
    }
  }
}

}  // namespace chemenum
