#pragma once

#include <string>
#include <vector>

namespace anharmonic::validation {

struct CheckResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

/// Runs one numbered cross-oracle check (1..12).
CheckResult run_check(int id);

/// quick = true skips the long-running checks (2, 4 at N=512, 10, 11).
std::vector<CheckResult> run_suite(bool quick, bool inject_failure = false);

constexpr int kNumChecks = 12;

}  // namespace anharmonic::validation
