#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qfz/graph.hpp"

namespace qfz::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageOrIo = 2 };

// Runs one verb. `args` excludes the program name. "-" as a path means
// stdin/stdout.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class Outcome { kPass, kFail, kSkip };

struct PropertyResult {
  std::string name;
  Outcome outcome;
  std::string detail;
};

// Property battery behind `qfz verify`.
std::vector<PropertyResult> verify_properties(const Graph& graph, const WeightMap& weights);

}  // namespace qfz::cli
