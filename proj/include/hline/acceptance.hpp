#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "hline/classify.hpp"

namespace hline::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no time limit
};

struct Options {
  /// Path orders taking part; each criterion intersects this range with
  /// its own n values.
  std::size_t n_lo = 4;
  std::size_t n_hi = 8;
  Budget budget;
};

/// Runs criteria 1..11 in order. `progress` sees each result as it lands.
std::vector<CriterionResult> run_all(const Options& opts,
                                     const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace hline::acceptance
