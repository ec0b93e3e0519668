#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bmcp/instance.hpp"
#include "bmcp/rng.hpp"
#include "bmcp/search_state.hpp"

namespace bmcp {

inline constexpr double kInitialProbability = 0.5;

/// Per-item selection probabilities updated with linear reward/penalty rules.
///
///   reward:  p <- beta + (1 - beta) p
///   punish:  p <- (1 - gamma) p
///
/// Both maps are contractions toward 1 and 0 respectively, so starting from
/// 0.5 every entry stays strictly inside (0, 1).
class ProbabilityVector {
public:
  /// Throws std::invalid_argument unless items >= 1 and both factors lie in
  /// the open interval (0, 1).
  explicit ProbabilityVector(std::size_t items, double reward_factor = 0.5,
                             double penalty_factor = 0.5);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t item) const { return values_[item]; }
  std::span<const double> values() const { return values_; }
  double reward_factor() const { return reward_factor_; }
  double penalty_factor() const { return penalty_factor_; }

  void reward(std::size_t item) {
    values_[item] = reward_factor_ + (1.0 - reward_factor_) * values_[item];
  }
  void punish(std::size_t item) {
    values_[item] = (1.0 - penalty_factor_) * values_[item];
  }

  /// Every entry back to 0.5.
  void reset();
  void set(std::size_t item, double value) { values_[item] = value; }

private:
  std::vector<double> values_;
  double reward_factor_;
  double penalty_factor_;
};

/// Learning-guided restart point. Each selected item of `best` is dropped
/// when u <= p_i. The items unselected in `best` are then visited in random
/// order: the scan stops at the first one that no longer fits, otherwise the
/// item is packed when u > p_j. u is uniform on (0, 1).
Selection probability_perturbation(const SearchState& best,
                                   const ProbabilityVector& prob, Rng& rng);

/// Removes floor(k/2) uniformly chosen items of the k selected.
Selection drop_random_half(const SearchState& best, Rng& rng);

/// drop_random_half followed by random_fill. Ignores the learned
/// probabilities.
Selection random_perturbation(const SearchState& best, Rng& rng);

} // namespace bmcp
