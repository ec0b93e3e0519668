#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace bmcp {

/// (a, b) observations paired by instance or by run.
using PairedSample = std::vector<std::pair<double, double>>;

inline constexpr std::size_t kWilcoxonExactLimit = 20;

struct WilcoxonResult {
  /// Two-sided p-value.
  double p_value = 1.0;
  /// Rank sum of the positive differences a - b.
  double w_plus = 0.0;
  double w_minus = 0.0;
  /// Pairs left after discarding zero differences.
  std::size_t nonzero = 0;
  bool exact = true;
};

/// Wilcoxon signed-rank test on a - b. Zero differences are dropped and tied
/// magnitudes receive averaged ranks. Up to kWilcoxonExactLimit nonzero
/// differences the null distribution of W+ is counted exactly over all sign
/// assignments; above that a normal approximation with tie and continuity
/// corrections is used. All-zero differences give p = 1. Throws
/// std::invalid_argument on an empty sample.
WilcoxonResult wilcoxon_signed_rank(const PairedSample& sample);

} // namespace bmcp
