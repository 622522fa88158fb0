#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equicolor::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,         // I/O or usage
  kInvalidInput = 2,    // bad graph, bad coloring, bound or degree violation
  kNoImprovement = 3,
  kInfeasible = 4,      // oracle with --require-feasible
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace equicolor::cli
