// Acceptance runner: executes every verification suite and prints one
// pass/fail line per criterion, including the check count, elapsed time, and
// the per-criterion time budget.  Exit status is the number of failures.

#include <chrono>
#include <cstdio>

#include "acceptance_suites.hpp"

int main() {
  static const double budget_s[] = {60, 120, 10, 120, 300, 120,
                                    60, 120, 60, 600, 120};
  const auto& names = g1::acceptance_suite_names();
  int failures = 0;
  for (size_t i = 0; i < names.size(); i++) {
    auto t0 = std::chrono::steady_clock::now();
    g1::SuiteResult r = g1::run_acceptance_suite(names[i]);
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0).count();
    bool ok = r.passed() && secs < budget_s[i];
    if (!ok) failures++;
    std::printf("criterion %2zu (%s): %s  [%ld checks, %ld failed, %.1fs of %.0fs]\n",
                i + 1, r.name.c_str(), ok ? "PASS" : "FAIL", r.checks,
                r.failures, secs, budget_s[i]);
    std::fflush(stdout);
  }
  return failures;
}
