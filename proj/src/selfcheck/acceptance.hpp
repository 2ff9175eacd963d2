// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace pvform::selfcheck {

enum class Outcome { pass, fail, missing_reference };

struct CriterionResult {
  int id = 0;
  std::string name;
  Outcome outcome = Outcome::fail;
  double seconds = 0;
  std::string detail;
};

inline constexpr int kCriterionCount = 10;

/// Runs one criterion (1-based). Reference tables are read from `data_dir`.
CriterionResult run_criterion(int id, const std::string& data_dir);
std::vector<CriterionResult> run_all(const std::string& data_dir);

/// "PASS  4  table 4V1+2S reproduction  (0.41 s)  20/20 rows".
std::string format_result(const CriterionResult& r);

}  // namespace pvform::selfcheck
