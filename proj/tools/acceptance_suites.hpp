#ifndef G1_ACCEPTANCE_SUITES_HPP
#define G1_ACCEPTANCE_SUITES_HPP

// Named verification suites covering the full property catalogue: each suite
// runs a batch of exact checks and reports the number of failures.  Shared by
// the acceptance runner and the CLI `verify` verb.

#include <string>
#include <vector>

namespace g1 {

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  bool passed() const { return failures == 0 && checks > 0; }
};

// The suite names in canonical order.
const std::vector<std::string>& acceptance_suite_names();

// Runs one suite by name; throws std::invalid_argument for unknown names.
SuiteResult run_acceptance_suite(const std::string& name);

}  // namespace g1

#endif  // G1_ACCEPTANCE_SUITES_HPP
