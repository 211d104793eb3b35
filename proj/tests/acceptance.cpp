// Acceptance suite: runs the eight top-level verification criteria, prints
// one PASS/FAIL line per criterion (plus the underlying CHECK lines) and
// exits with the number of failed criteria.
//
//   triad_acceptance                 run everything
//   triad_acceptance --criterion N   run a single criterion
#include "triad/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

namespace {

using triad::CheckResult;
using triad::RunReport;

struct Criterion {
  int number;
  std::string name;
  double time_limit_s;  // <= 0: no limit
  std::function<std::vector<CheckResult>()> run;
};

constexpr std::uint64_t kSeed = 20240817ull;

std::vector<CheckResult> determinism_checks() {
  const std::string a = triad::verify_all(kSeed).to_text();
  const std::string b = triad::verify_all(kSeed).to_text();
  CheckResult c;
  c.name = "determinism.byte_identical_reports";
  c.computed = (a == b) ? 0.0 : 1.0;
  c.expected = 0.0;
  c.tol = 0.0;
  c.pass = (a == b) && !a.empty();
  return {c};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[i + 1]);
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "isomorphism suite", 5.0,
       [] { return triad::verify_isomorphisms(kSeed); }},
      {2, "boost equivalence", 2.0,
       [] { return triad::verify_boost_equivalence(kSeed); }},
      {3, "invariant suite", 0.0,
       [] { return triad::verify_invariant_suite(kSeed); }},
      {4, "zero-spin theorem", 30.0,
       [] { return triad::verify_zero_spin(kSeed); }},
      {5, "averaged-formula reproduction", 60.0,
       [] { return triad::verify_averaged_terms(); }},
      {6, "prediction reproduction", 60.0,
       [] { return triad::verify_predictions(); }},
      {7, "precession identities", 2.0,
       [] { return triad::verify_precession(kSeed); }},
      {8, "determinism", 0.0, determinism_checks},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.number != only) continue;
    const auto start = std::chrono::steady_clock::now();
    const std::vector<CheckResult> checks = c.run();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();

    bool pass = true;
    RunReport rep;
    rep.checks = checks;
    std::fputs(rep.to_text().c_str(), stdout);
    for (const auto& chk : checks) pass = pass && chk.pass;
    const bool in_time = c.time_limit_s <= 0.0 || elapsed <= c.time_limit_s;
    pass = pass && in_time;

    std::printf("CRITERION %d (%s) %s [%.2f s%s]\n", c.number, c.name.c_str(),
                pass ? "PASS" : "FAIL", elapsed,
                in_time ? "" : ", over time limit");
    if (!pass && (c.number == 5 || c.number == 6)) {
      std::printf(
          "NOTE: brute-force particle averages give exactly twice the "
          "tabulated transverse/projection coefficients; see the README's "
          "acceptance section for the measured ratios.\n");
    }
    if (!pass) ++failed;
  }
  if (failed > 0) {
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", failed);
  } else {
    std::printf("ACCEPTANCE: all criteria passed\n");
  }
  return failed;
}
