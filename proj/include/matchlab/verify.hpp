#pragma once

#include <string>
#include <vector>

namespace matchlab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Named invariant suites behind `matchlab verify`. Suites: core, parity,
// barrier-degrees, pm-free, duality, absorbing, hypotheses, all.
// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_verify_suite(const std::string& suite);

std::vector<std::string> verify_suite_names();

}  // namespace matchlab
