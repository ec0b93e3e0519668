#include "bmcp/search_state.hpp"

#include <stdexcept>

namespace bmcp {

SearchState::SearchState(const Instance& inst, Selection selection)
    : inst_(&inst), selection_(std::move(selection)),
      coverage_(inst.element_count(), 0),
      unique_(word_count(inst.element_count()), 0),
      position_(inst.item_count(), 0) {
  if (selection_.size() != inst.item_count()) {
    throw std::invalid_argument("selection length differs from item count");
  }
  for (std::size_t i = 0; i < inst.item_count(); ++i) {
    auto& list = selection_[i] ? in_ : out_;
    position_[i] = list.size();
    list.push_back(i);
    if (!selection_[i]) continue;
    weight_ += inst.weight(i);
    for (auto j : inst.elements(i)) ++coverage_[j];
  }
  if (weight_ > inst.capacity()) {
    throw std::invalid_argument("infeasible selection: weight " +
                                std::to_string(weight_) + " exceeds capacity " +
                                std::to_string(inst.capacity()));
  }
  for (std::size_t j = 0; j < coverage_.size(); ++j) {
    if (coverage_[j] > 0) objective_ += inst.profit(j);
    if (coverage_[j] == 1) set_unique(j, true);
  }
}

void SearchState::set_unique(std::size_t element, bool on) {
  const Word bit = Word{1} << (element % kWordBits);
  if (on) {
    unique_[element / kWordBits] |= bit;
  } else {
    unique_[element / kWordBits] &= ~bit;
  }
}

Profit SearchState::insertion_gain(std::size_t item) const {
  Profit gain = 0;
  for (auto j : inst_->elements(item)) {
    if (coverage_[j] == 0) gain += inst_->profit(j);
  }
  return gain;
}

Profit SearchState::removal_loss(std::size_t item) const {
  Profit loss = 0;
  for (auto j : inst_->elements(item)) {
    if (coverage_[j] == 1) loss += inst_->profit(j);
  }
  return loss;
}

Profit SearchState::shared_unique_profit(std::size_t out, std::size_t in) const {
  Profit shared = 0;
  auto out_row = inst_->row_bits(out);
  auto in_row = inst_->row_bits(in);
  for (std::size_t w = 0; w < out_row.size(); ++w) {
    Word bits = out_row[w] & in_row[w] & unique_[w];
    while (bits) {
      shared += inst_->profit(w * kWordBits +
                              static_cast<std::size_t>(__builtin_ctzll(bits)));
      bits &= bits - 1;
    }
  }
  return shared;
}

MoveDelta SearchState::flip_delta(std::size_t item) const {
  if (item >= inst_->item_count()) {
    throw std::invalid_argument("item index out of range");
  }
  MoveDelta d;
  if (selection_[item]) {
    d.objective = -removal_loss(item);
    d.weight = -inst_->weight(item);
  } else {
    d.objective = insertion_gain(item);
    d.weight = inst_->weight(item);
  }
  d.feasible = weight_ + d.weight <= inst_->capacity();
  return d;
}

MoveDelta SearchState::swap_delta(std::size_t out, std::size_t in) const {
  if (out >= inst_->item_count() || in >= inst_->item_count()) {
    throw std::invalid_argument("item index out of range");
  }
  if (!selection_[out] || selection_[in]) {
    throw std::invalid_argument("swap needs a selected and an unselected item");
  }
  MoveDelta d;
  d.objective =
      insertion_gain(in) - removal_loss(out) + shared_unique_profit(out, in);
  d.weight = inst_->weight(in) - inst_->weight(out);
  d.feasible = weight_ + d.weight <= inst_->capacity();
  return d;
}

MoveDelta SearchState::delta(const Move& move) const {
  return move.kind == MoveKind::Flip ? flip_delta(move.in)
                                     : swap_delta(move.out, move.in);
}

void SearchState::apply(const Move& move) {
  const MoveDelta d = delta(move);
  if (!d.feasible) throw std::invalid_argument("infeasible move");
  if (move.kind == MoveKind::Swap) toggle(move.out);
  toggle(move.in);
}

void SearchState::toggle(std::size_t item) {
  const bool leaving = selection_[item];
  auto& from = leaving ? in_ : out_;
  auto& to = leaving ? out_ : in_;
  const std::size_t last = from.back();
  from[position_[item]] = last;
  position_[last] = position_[item];
  from.pop_back();
  position_[item] = to.size();
  to.push_back(item);
  selection_[item] = !leaving;

  if (leaving) {
    weight_ -= inst_->weight(item);
    for (auto j : inst_->elements(item)) {
      const auto h = --coverage_[j];
      if (h == 0) {
        objective_ -= inst_->profit(j);
        set_unique(j, false);
      } else if (h == 1) {
        set_unique(j, true);
      }
    }
  } else {
    weight_ += inst_->weight(item);
    for (auto j : inst_->elements(item)) {
      const auto h = ++coverage_[j];
      if (h == 1) {
        objective_ += inst_->profit(j);
        set_unique(j, true);
      } else if (h == 2) {
        set_unique(j, false);
      }
    }
  }
}

bool SearchState::consistent() const {
  const SearchState fresh(*inst_, selection_);
  return fresh == *this && fresh.unique_ == unique_ &&
         objective_ == full_objective(*inst_, selection_) &&
         weight_ == bmcp::total_weight(*inst_, selection_);
}

} // namespace bmcp
