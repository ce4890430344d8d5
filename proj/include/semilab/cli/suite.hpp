#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semilab/inequalities/report.hpp"

namespace semilab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  Json data = Json::object();
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t workers = 0;
};

inline constexpr int kCriterionCount = 9;

// Runs acceptance criterion `id` (1..9).
CriterionResult run_criterion(int id, const SuiteOptions& options);

std::vector<CriterionResult> run_acceptance(const SuiteOptions& options,
                                            const std::vector<int>& ids = {});

// "[PASS] 3 invariance classification: ..." lines.
std::string format_criterion(const CriterionResult& result);

Json to_json(const CriterionResult& result);

}  // namespace semilab
