#pragma once

#include <map>
#include <string>
#include <vector>

#include "chemenum/spec_io.hpp"

namespace chemenum {

enum class Stage { Tree, Mono, BiBlock, All };

// Exit codes of a run, also used by the CLI.
enum ExitCode {
  kOk = 0,
  kParseError = 2,
  kCountLimit = 3,
  kTimeLimit = 4,
  kOracleMismatch = 5,
};

struct RunConfig {
  ProblemSpec spec;
  Stage stage = Stage::All;
  std::string input_path;   // optional seeds for the first stage of the chain
  std::string output_path;  // empty = stdout
  long long limit = -1;     // max emitted graphs, -1 = unlimited
  double time_limit_s = 60.0;
  bool count_only = false;
  bool oracle_verify = false;
  int workers = 1;
};

struct RunResult {
  int exit_code = kOk;
  std::string status = "ok";  // ok | no-solutions | limit-exceeded | time-exceeded
  std::vector<ChemicalGraph> graphs;
  std::map<std::string, long long> stats;  // emitted as "# key value" lines
};

// Builds the path-frequency instance of a sample graph: the path set holds
// every sequence of length <= N occurring in the sample; level-0 entries
// are pinned exactly and longer entries are widened by s in each direction.
PathSpec build_instance(const ChemicalGraph& sample, int max_len, int cover_len, int relax,
                        CoverageMode mode);

// Same, packaged with the sample's color table.
ProblemSpec instance_spec(const ChemicalGraph& sample, int max_len, int cover_len, int relax,
                          CoverageMode mode);

// Runs the stage chain: exhaustive tree seeds under the twice-relaxed lower
// bound, monocyclic closure under the once-relaxed bound, bi-block children
// under the full bounds, with upper-bound pruning at every edge addition.
// Deterministic output order for any worker count.
RunResult run(const RunConfig& config);

// Writes graphs plus "# key value" stat lines.
void write_result(std::ostream& os, const RunResult& r, bool count_only);

}  // namespace chemenum
