#include "bmcp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace bmcp {

WilcoxonResult wilcoxon_signed_rank(const PairedSample& sample) {
  if (sample.empty()) throw std::invalid_argument("empty paired sample");

  std::vector<double> diffs;
  for (const auto& [a, b] : sample) {
    if (a != b) diffs.push_back(a - b);
  }
  WilcoxonResult result;
  result.nonzero = diffs.size();
  if (diffs.empty()) return result;

  const std::size_t k = diffs.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::abs(diffs[x]) < std::abs(diffs[y]);
  });

  // Ranks are kept doubled so averaged ties stay integral.
  std::vector<std::int64_t> doubled(k);
  double tie_term = 0.0;
  for (std::size_t lo = 0; lo < k;) {
    std::size_t hi = lo;
    while (hi + 1 < k &&
           std::abs(diffs[order[hi + 1]]) == std::abs(diffs[order[lo]])) {
      ++hi;
    }
    const auto rank2 = static_cast<std::int64_t>(lo + 1 + hi + 1);
    for (std::size_t t = lo; t <= hi; ++t) doubled[order[t]] = rank2;
    const double t = static_cast<double>(hi - lo + 1);
    tie_term += t * t * t - t;
    lo = hi + 1;
  }

  std::int64_t plus2 = 0;
  std::int64_t total2 = 0;
  for (std::size_t i = 0; i < k; ++i) {
    total2 += doubled[i];
    if (diffs[i] > 0) plus2 += doubled[i];
  }
  result.w_plus = static_cast<double>(plus2) / 2.0;
  result.w_minus = static_cast<double>(total2 - plus2) / 2.0;

  if (k <= kWilcoxonExactLimit) {
    // counts[s]: sign assignments whose doubled W+ equals s.
    std::vector<double> counts(static_cast<std::size_t>(total2) + 1, 0.0);
    counts[0] = 1.0;
    std::int64_t reach = 0;
    for (auto r : doubled) {
      for (std::int64_t s = reach; s >= 0; --s) {
        counts[static_cast<std::size_t>(s + r)] += counts[static_cast<std::size_t>(s)];
      }
      reach += r;
    }
    double lower = 0.0;
    double upper = 0.0;
    for (std::int64_t s = 0; s <= total2; ++s) {
      if (s <= plus2) lower += counts[static_cast<std::size_t>(s)];
      if (s >= plus2) upper += counts[static_cast<std::size_t>(s)];
    }
    const double all = std::ldexp(1.0, static_cast<int>(k));
    result.p_value = std::min(1.0, 2.0 * std::min(lower, upper) / all);
    result.exact = true;
    return result;
  }

  const double n = static_cast<double>(k);
  const double mean = n * (n + 1.0) / 4.0;
  const double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term / 48.0;
  const double z = std::max(0.0, std::abs(result.w_plus - mean) - 0.5) /
                   std::sqrt(var);
  result.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  result.exact = false;
  return result;
}

} // namespace bmcp
