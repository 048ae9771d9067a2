#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mine/analysis.hpp"

namespace mine {

/// Bad flags or flag values; run_cli turns this into exit code 2.
struct CliUsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliOptions {
  std::string input;
  AnalysisTask task;
  std::string output;
  bool show_help = false;
  std::string help_text;
};

/// Parses `mine` arguments (program name excluded): positional input file,
/// -a alpha, -c, -m master | -p i j (mutually exclusive), -o output,
/// -j workers, --min-variance. Defaults: alpha 0.6, c 15, all-pairs mode,
/// output <input stem>_MINE.txt, workers = available parallelism.
CliOptions parse_cli(const std::vector<std::string>& args);

/// Full front end: parse, read, analyze, write. Returns 0 on success, 2 on
/// usage errors, 1 on ingestion/analysis/output errors, with a one-line
/// diagnostic on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mine
