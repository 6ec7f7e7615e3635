#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <vector>

#include "transfun/axiom.hpp"

namespace transfun {

struct TrialResult {
  std::optional<Witness> witness;
  /// Per-trial statistic aggregated by max (e.g. a bound ratio); < 0 when
  /// the trial has none.
  double statistic = -1.0;
};

struct TrialSummary {
  std::optional<Witness> first_violation;
  double max_statistic = -1.0;
  std::size_t trials_run = 0;
};

/// Reference runner: trials in index order, stopping at the first violation.
template <class TrialFn>
TrialSummary run_trials_serial(std::size_t trials, TrialFn&& trial) {
  TrialSummary summary;
  for (std::size_t i = 0; i < trials; ++i) {
    TrialResult r = trial(i);
    summary.max_statistic = std::max(summary.max_statistic, r.statistic);
    summary.trials_run = i + 1;
    if (r.witness) {
      summary.first_violation = std::move(r.witness);
      break;
    }
  }
  return summary;
}

/// OpenMP runner. Trials run in blocks; each block is scanned in index order
/// afterwards so the summary matches run_trials_serial exactly, including
/// which exception (if any) propagates.
template <class TrialFn>
TrialSummary run_trials_parallel(std::size_t trials, TrialFn&& trial,
                                 std::size_t block_size = 256) {
  TrialSummary summary;
  std::vector<TrialResult> results;
  std::vector<std::exception_ptr> errors;
  for (std::size_t start = 0; start < trials; start += block_size) {
    const std::size_t count = std::min(block_size, trials - start);
    results.assign(count, TrialResult{});
    errors.assign(count, nullptr);
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 8)
    for (long long k = 0; k < n; ++k) {
      const auto i = static_cast<std::size_t>(k);
      try {
        results[i] = trial(start + i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      summary.max_statistic = std::max(summary.max_statistic, results[i].statistic);
      summary.trials_run = start + i + 1;
      if (results[i].witness) {
        summary.first_violation = std::move(results[i].witness);
        return summary;
      }
    }
  }
  return summary;
}

}  // namespace transfun
