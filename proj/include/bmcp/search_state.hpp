#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bmcp/instance.hpp"

namespace bmcp {

struct MoveDelta {
  Profit objective = 0;
  Weight weight = 0;
  bool feasible = false;

  bool operator==(const MoveDelta&) const = default;
};

enum class MoveKind { Flip, Swap };

/// Flip toggles `in` (the item field `out` is unused); Swap removes `out`
/// and inserts `in`.
struct Move {
  MoveKind kind = MoveKind::Flip;
  std::size_t out = 0;
  std::size_t in = 0;

  static Move flip(std::size_t item) { return {MoveKind::Flip, item, item}; }
  static Move swap(std::size_t out, std::size_t in) {
    return {MoveKind::Swap, out, in};
  }
  bool operator==(const Move&) const = default;
};

/// Feasible selection with incrementally maintained coverage counts, total
/// weight and objective.
///
/// Besides the counts H_j the state keeps a bitset of the elements covered
/// exactly once; a swap's correction term is the profit of E_out ∩ E_in
/// restricted to that set. The selected and unselected items are also kept
/// as index lists for neighborhood enumeration (order is unspecified).
class SearchState {
public:
  /// Throws std::invalid_argument if the selection exceeds the capacity or
  /// has the wrong length.
  SearchState(const Instance& inst, Selection selection);

  const Instance& instance() const { return *inst_; }
  const Selection& selection() const { return selection_; }
  bool selected(std::size_t item) const { return selection_[item]; }
  std::span<const std::size_t> selected_items() const { return in_; }
  std::span<const std::size_t> unselected_items() const { return out_; }

  std::span<const std::size_t> coverage() const { return coverage_; }
  std::span<const Word> unique_bits() const { return unique_; }
  Weight total_weight() const { return weight_; }
  Profit objective() const { return objective_; }
  Weight residual() const { return inst_->capacity() - weight_; }

  /// Profit gained by inserting an unselected item.
  Profit insertion_gain(std::size_t item) const;
  /// Profit lost by removing a selected item.
  Profit removal_loss(std::size_t item) const;
  /// Profit of elements in both rows that `out` alone covers.
  Profit shared_unique_profit(std::size_t out, std::size_t in) const;

  MoveDelta flip_delta(std::size_t item) const;
  /// Throws std::invalid_argument unless `out` is selected and `in` is not.
  MoveDelta swap_delta(std::size_t out, std::size_t in) const;
  MoveDelta delta(const Move& move) const;

  /// Throws std::invalid_argument on an infeasible or malformed move.
  void apply(const Move& move);

  /// Exact comparison of the derived fields against a rebuild.
  bool consistent() const;

  bool operator==(const SearchState& other) const {
    return selection_ == other.selection_ && coverage_ == other.coverage_ &&
           weight_ == other.weight_ && objective_ == other.objective_;
  }

private:
  void toggle(std::size_t item);
  void set_unique(std::size_t element, bool on);

  const Instance* inst_;
  Selection selection_;
  std::vector<std::size_t> coverage_;
  std::vector<Word> unique_;
  Weight weight_ = 0;
  Profit objective_ = 0;
  std::vector<std::size_t> in_;
  std::vector<std::size_t> out_;
  std::vector<std::size_t> position_;
};

inline SearchState build_state(const Instance& inst, Selection selection) {
  return SearchState(inst, std::move(selection));
}

} // namespace bmcp
