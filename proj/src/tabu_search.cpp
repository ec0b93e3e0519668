#include "bmcp/tabu_search.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bmcp {

std::int64_t tabu_tenure(std::size_t items, std::size_t elements) {
  return 4 + static_cast<std::int64_t>(std::max(items, elements) / 100);
}

std::int64_t tabu_depth(std::size_t items) {
  if (items == 0) throw std::invalid_argument("item count must be positive");
  if (items >= 1100) {
    throw std::invalid_argument(
        "adaptive depth (1100 - m) * 20 is not positive for m = " +
        std::to_string(items) + "; set the depth explicitly");
  }
  return (1100 - static_cast<std::int64_t>(items)) * 20;
}

TabuList::TabuList(std::size_t items, std::int64_t tenure)
    : expiry_(items, 0), tenure_(tenure) {
  if (tenure < 1) throw std::invalid_argument("tabu tenure must be positive");
}

Selection random_fill(const Instance& inst, Rng& rng) {
  return random_fill(inst, Selection(inst.item_count(), false), rng);
}

Selection random_fill(const Instance& inst, Selection start, Rng& rng) {
  Weight weight = total_weight(inst, start);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < inst.item_count(); ++i) {
    if (!start[i]) order.push_back(i);
  }
  rng.shuffle(order);
  for (auto i : order) {
    if (weight + inst.weight(i) > inst.capacity()) break;
    start[i] = true;
    weight += inst.weight(i);
  }
  return start;
}

SearchState descent_local_search(SearchState state, Rng& rng) {
  const Instance& inst = state.instance();
  for (;;) {
    Profit best_gain = 0;
    std::size_t ties = 0;
    Move chosen;
    for (auto out : state.selected_items()) {
      const Profit loss = state.removal_loss(out);
      for (auto in : state.unselected_items()) {
        if (state.total_weight() - inst.weight(out) + inst.weight(in) >
            inst.capacity()) {
          continue;
        }
        const Profit gain = state.insertion_gain(in) - loss +
                            state.shared_unique_profit(out, in);
        if (gain <= 0 || gain < best_gain) continue;
        if (gain > best_gain) {
          best_gain = gain;
          ties = 0;
        }
        if (rng.below(++ties) == 0) chosen = Move::swap(out, in);
      }
    }
    if (ties == 0) return state;
    state.apply(chosen);
  }
}

SearchState initial_solution(const Instance& inst, Rng& rng) {
  return descent_local_search(SearchState(inst, random_fill(inst, rng)), rng);
}

std::optional<MoveChoice> select_move(const SearchState& state,
                                      const TabuList& tabu,
                                      Profit best_so_far, Rng& rng) {
  const Instance& inst = state.instance();
  const Weight room = state.residual();
  const Profit base = state.objective();

  std::vector<Profit> flip_value(inst.item_count());
  for (auto i : state.selected_items()) flip_value[i] = -state.removal_loss(i);
  for (auto i : state.unselected_items()) flip_value[i] = state.insertion_gain(i);

  Profit best = std::numeric_limits<Profit>::min();
  std::size_t ties = 0;
  std::size_t scanned = 0;
  MoveChoice choice;

  auto consider = [&](const Move& move, Profit delta_objective,
                      Weight delta_weight, bool is_tabu) {
    const Profit result = base + delta_objective;
    if (is_tabu && result <= best_so_far) return;
    if (result < best) return;
    if (result > best) {
      best = result;
      ties = 0;
    }
    if (rng.below(++ties) == 0) {
      choice.move = move;
      choice.delta = {delta_objective, delta_weight, true};
    }
  };

  for (std::size_t i = 0; i < inst.item_count(); ++i) {
    ++scanned;
    const Weight dw = state.selected(i) ? -inst.weight(i) : inst.weight(i);
    if (dw > room) continue;
    consider(Move::flip(i), flip_value[i], dw, tabu.is_tabu(i));
  }

  const auto unique = state.unique_bits();
  std::vector<Word> exclusive(inst.words_per_row());
  for (auto out : state.selected_items()) {
    auto out_row = inst.row_bits(out);
    bool any_exclusive = false;
    for (std::size_t w = 0; w < exclusive.size(); ++w) {
      exclusive[w] = out_row[w] & unique[w];
      any_exclusive |= exclusive[w] != 0;
    }
    const bool out_tabu = tabu.is_tabu(out);
    for (auto in : state.unselected_items()) {
      ++scanned;
      const Weight dw = inst.weight(in) - inst.weight(out);
      if (dw > room) continue;
      // The swap result never exceeds base + gain(in).
      if (base + flip_value[in] < best) continue;
      Profit delta_objective = flip_value[in] + flip_value[out];
      if (any_exclusive) {
        for_each_common_bit(exclusive, inst.row_bits(in), [&](std::size_t j) {
          delta_objective += inst.profit(j);
        });
      }
      consider(Move::swap(out, in), delta_objective, dw,
               out_tabu || tabu.is_tabu(in));
    }
  }

  if (ties == 0) return std::nullopt;
  choice.scanned = scanned;
  return choice;
}

TabuResult tabu_search(SearchState state, ProbabilityVector& prob,
                       const TsParams& params, Rng& rng,
                       const VisitHook& on_visit) {
  if (params.depth < 1) throw std::invalid_argument("tabu depth must be positive");
  TabuList tabu(state.instance().item_count(), params.tenure);
  TabuResult result{state, 0};
  std::int64_t stall = 0;
  while (stall < params.depth) {
    auto choice = select_move(state, tabu, result.best.objective(), rng);
    if (!choice) break;
    const Move& move = choice->move;
    state.apply(move);
    ++result.iterations;

    if (move.kind == MoveKind::Swap) {
      prob.punish(move.out);
      tabu.mark(move.out);
      prob.reward(move.in);
    } else if (state.selected(move.in)) {
      prob.reward(move.in);
    } else {
      prob.punish(move.in);
    }
    tabu.mark(move.in);
    if (on_visit) on_visit(state);

    if (state.objective() > result.best.objective()) {
      result.best = state;
      stall = 0;
    } else {
      ++stall;
    }
    tabu.advance();
  }
  return result;
}

} // namespace bmcp
