#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gammasym/roots.hpp"

namespace gammasym {

/// A-D and BC up to max_classical_rank, then E6, E7, E8, F4, G2.
std::vector<RootSystemType> classification_types(int max_classical_rank = 8);

/// Every type of rank <= max_rank, in the same order.
std::vector<RootSystemType> types_up_to_rank(int max_rank);

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 20240615;
  /// Random cases per randomized property.
  std::size_t random_cases = 10'000;
};

/// Runs the numbered criteria (1..10) and reports each. An exception inside
/// a criterion marks it failed with the message as detail.
std::vector<CriterionResult> run_suite(const SuiteOptions& options = {});
CriterionResult run_criterion(int id, const SuiteOptions& options = {});

inline constexpr int kCriterionCount = 10;

/// Peak resident set size of this process in bytes.
std::uint64_t peak_rss_bytes();

}  // namespace gammasym
