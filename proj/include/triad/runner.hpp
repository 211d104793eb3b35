// Scenario dispatch: runs the configured scenario, emits trajectory.csv and
// report.txt into the output directory and returns the check report.
#pragma once

#include "triad/config.hpp"

#include <string>
#include <vector>

namespace triad {

struct CheckResult {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct RunReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  int fail_count() const;
  /// One `CHECK <name> computed=<v> expected=<v> tol=<v> PASS|FAIL` line per
  /// check plus a summary line; deterministic byte-for-byte for a fixed
  /// check list.
  std::string to_text() const;
};

/// Makes a pass/fail entry from an absolute comparison.
CheckResult make_check(const std::string& name, double computed,
                       double expected, double tol);

/// Exit codes: 0 all checks pass, 1 check failure, 2 config error, 3 IO.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitConfigError = 2,
  kExitIoError = 3
};

/// Runs the scenario and writes <out_dir>/trajectory.csv and
/// <out_dir>/report.txt.  Throws std::runtime_error on IO failure.
RunReport run_scenario(const Scenario& sc, const std::string& out_dir);

}  // namespace triad
