#pragma once

#include "core/common.hpp"

namespace curveft {

struct CriterionResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;  // measured values and thresholds, human-readable
  double seconds = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::vector<CriterionResult> results;
  bool all_pass = false;
  double total_seconds = 0.0;
};

// Runs the verification suite: "full" exercises the complete parameter ranges,
// "fast" a reduced smoke version of every check with the same thresholds
// unless inherently range-bound.
VerifyReport run_verification(const std::string& suite);

}  // namespace curveft
