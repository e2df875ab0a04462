#pragma once

#include <string>
#include <vector>

namespace netosc {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
};

/// Number of acceptance criteria.
inline constexpr int kCriterionCount = 11;

/// Runs one criterion (1-based). Exceptions are reported as failures.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_acceptance();

/// One `PASS`/`FAIL` line per criterion followed by indented details.
std::string format_acceptance(const std::vector<CriterionResult>& results);

}  // namespace netosc
