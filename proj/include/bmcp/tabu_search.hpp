#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bmcp/instance.hpp"
#include "bmcp/probability.hpp"
#include "bmcp/rng.hpp"
#include "bmcp/search_state.hpp"

namespace bmcp {

/// 4 + floor(max(m, n) / 100).
std::int64_t tabu_tenure(std::size_t items, std::size_t elements);

/// (1100 - m) * 20. Throws std::invalid_argument for m >= 1100, where the
/// rule yields no positive depth and an explicit value is required.
std::int64_t tabu_depth(std::size_t items);

/// Per-item tabu expiry. Iterations count from 1; an item marked during
/// iteration t is tabu for iterations t+1 .. t+tenure and free afterwards.
class TabuList {
public:
  TabuList(std::size_t items, std::int64_t tenure);

  std::int64_t iteration() const { return iteration_; }
  std::int64_t tenure() const { return tenure_; }
  std::int64_t expiry(std::size_t item) const { return expiry_[item]; }

  /// Tabu at the current iteration.
  bool is_tabu(std::size_t item) const {
    return iteration_ <= expiry_[item];
  }
  void mark(std::size_t item) { expiry_[item] = iteration_ + tenure_; }
  void advance() { ++iteration_; }

private:
  std::vector<std::int64_t> expiry_;
  std::int64_t tenure_;
  std::int64_t iteration_ = 1;
};

struct TsParams {
  std::int64_t depth = 1;
  std::int64_t tenure = 1;
};

/// Packs items in random order until the first one that does not fit. The
/// overload starting from a partial selection only considers its unselected
/// items; the start selection must be feasible.
Selection random_fill(const Instance& inst, Rng& rng);
Selection random_fill(const Instance& inst, Selection start, Rng& rng);

/// Best-improvement 1-for-1 exchange descent; stops at a swap-local optimum.
/// Ties between equally good exchanges are broken uniformly at random.
SearchState descent_local_search(SearchState state, Rng& rng);

/// random_fill followed by descent_local_search.
SearchState initial_solution(const Instance& inst, Rng& rng);

struct MoveChoice {
  Move move;
  MoveDelta delta;
  /// Candidate moves examined: m flips plus |V| * |V̄| swaps at most.
  std::size_t scanned = 0;
};

/// Best admissible move over the feasible flip and swap neighborhoods.
/// A move is admissible when none of its items is tabu, or when its result
/// strictly exceeds `best_so_far`. Ties are broken uniformly at random.
std::optional<MoveChoice> select_move(const SearchState& state,
                                      const TabuList& tabu,
                                      Profit best_so_far, Rng& rng);

/// Optional instrumentation called on every state the search moves to.
using VisitHook = std::function<void(const SearchState&)>;

struct TabuResult {
  SearchState best;
  std::int64_t iterations = 0;
};

/// Tabu search over N1 ∪ N2 with a fresh tabu list. Every accepted move
/// rewards the entering item and punishes the leaving one in `prob`. Stops
/// after `params.depth` consecutive iterations without improving the best,
/// or when no admissible move exists.
TabuResult tabu_search(SearchState state, ProbabilityVector& prob,
                       const TsParams& params, Rng& rng,
                       const VisitHook& on_visit = {});

} // namespace bmcp
