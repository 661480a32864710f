#pragma once

// The ten acceptance criteria, shared by the acceptance test binary and the
// CLI's verify-all.

#include <string>
#include <vector>

namespace tesler {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

struct AcceptanceOptions {
  unsigned jobs = 1;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "criterion 3 FAIL  quotient pipeline: ..." with the detail on the same line.
std::string format_result(const CriterionResult& r);

}  // namespace tesler
