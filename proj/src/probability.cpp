#include "bmcp/probability.hpp"

#include <algorithm>
#include <stdexcept>

#include "bmcp/tabu_search.hpp"

namespace bmcp {

ProbabilityVector::ProbabilityVector(std::size_t items, double reward_factor,
                                     double penalty_factor)
    : values_(items, kInitialProbability), reward_factor_(reward_factor),
      penalty_factor_(penalty_factor) {
  if (items == 0) throw std::invalid_argument("probability vector needs items");
  if (!(reward_factor > 0.0 && reward_factor < 1.0) ||
      !(penalty_factor > 0.0 && penalty_factor < 1.0)) {
    throw std::invalid_argument("reward and penalty factors must lie in (0, 1)");
  }
}

void ProbabilityVector::reset() {
  std::fill(values_.begin(), values_.end(), kInitialProbability);
}

Selection probability_perturbation(const SearchState& best,
                                   const ProbabilityVector& prob, Rng& rng) {
  const Instance& inst = best.instance();
  Selection sel = best.selection();
  Weight weight = best.total_weight();

  for (std::size_t i = 0; i < inst.item_count(); ++i) {
    if (sel[i] && rng.open_unit() <= prob[i]) {
      sel[i] = false;
      weight -= inst.weight(i);
    }
  }

  std::vector<std::size_t> order(best.unselected_items().begin(),
                                 best.unselected_items().end());
  std::sort(order.begin(), order.end());
  rng.shuffle(order);
  for (auto j : order) {
    if (weight + inst.weight(j) > inst.capacity()) break;
    if (rng.open_unit() > prob[j]) {
      sel[j] = true;
      weight += inst.weight(j);
    }
  }
  return sel;
}

Selection drop_random_half(const SearchState& best, Rng& rng) {
  std::vector<std::size_t> chosen(best.selected_items().begin(),
                                  best.selected_items().end());
  std::sort(chosen.begin(), chosen.end());
  rng.shuffle(chosen);
  Selection sel = best.selection();
  for (std::size_t k = 0; k < chosen.size() / 2; ++k) sel[chosen[k]] = false;
  return sel;
}

Selection random_perturbation(const SearchState& best, Rng& rng) {
  return random_fill(best.instance(), drop_random_half(best, rng), rng);
}

} // namespace bmcp
