#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rittforge {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Number of acceptance criteria.
inline constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion (1-based id). Exceptions are reported as failures.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// Runs the listed criteria (all when empty), ordered by id.
std::vector<CriterionResult> run_suite(const std::vector<int>& only, std::uint64_t seed);

}  // namespace rittforge
