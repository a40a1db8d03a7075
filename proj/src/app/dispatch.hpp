#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "app/json_writer.hpp"
#include "app/run_config.hpp"
#include "lieb/solutions.hpp"

namespace lieb::app {

/// Bad subcommand, unknown option or invalid parameter value.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json doc;
  std::vector<Verdict> verdicts;  // one per result entry
  Verdict overall = Verdict::Inconclusive;
  int exit_code = 1;
  std::string text;  // serialized doc
};

const std::vector<std::string>& subcommands();

/// Validates the configuration (throwing UsageError), then runs the subcommand.
/// Numerical failures propagate as lieb::Error.
Outcome run(const RunConfig& config);

/// 0 when every verdict is Verified or Convergent (NotApplicable entries
/// alongside them are allowed), 3 when all are NotApplicable, 1 otherwise.
int exit_code_for(const std::vector<Verdict>& verdicts);
Verdict overall_verdict(const std::vector<Verdict>& verdicts);

/// Rebuilds verdicts and exit code from a serialized report.
Outcome parse_report(const std::string& text);

}  // namespace lieb::app
