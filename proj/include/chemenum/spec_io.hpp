#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "chemenum/feature.hpp"

namespace chemenum {

// A full problem instance: the color alphabet plus the path-frequency
// specification.
//
// Spec file format, line oriented ('#' starts a comment):
//   color <sym> <val>          colors in ascending order of the alphabet
//   d <int>                    maximum bond multiplicity
//   K <int>                    feature-vector level
//   L <int>                    coverage length
//   mode A|P|none
//   s <int>                    relaxation used when the instance was built
//   atom <sym> <count>         level-0 equality (lower = upper = count)
//   path <seq> <lower> <upper|*>
struct ProblemSpec {
  std::shared_ptr<const ColorTable> table;
  int d = 1;
  int level = 1;  // K
  PathSpec path_spec;

  // Level-0 color counts, taken from the equal lower/upper entries.
  std::vector<std::pair<int, int>> atom_counts() const;
};

ProblemSpec read_spec(std::istream& is);
ProblemSpec read_spec_file(const std::string& path);
void write_spec(std::ostream& os, const ProblemSpec& spec);

}  // namespace chemenum
