#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmcp/instance.hpp"
#include "bmcp/tabu_search.hpp"

namespace bmcp {

enum class Perturbation { Probability, Random };

std::string to_string(Perturbation policy);
/// Accepts "probability" / "plts" and "random" / "plts0".
Perturbation parse_perturbation(const std::string& name);

struct SolverConfig {
  /// Wall-clock budget in seconds, checked between tabu-search phases.
  double time_limit = 600.0;
  double reward_factor = 0.5;
  double penalty_factor = 0.5;
  std::optional<std::int64_t> depth_override;
  std::optional<std::int64_t> tenure_override;
  Perturbation perturbation = Perturbation::Probability;
  /// Keep the learned vector across phases instead of resetting it to 0.5.
  bool carry_probability = false;
  std::uint64_t seed = 0;
  /// Run exactly this many tabu-search phases and ignore the clock.
  std::optional<std::size_t> rounds;
  /// Called on every state visited by the tabu search. batch() shares it
  /// between worker threads.
  VisitHook on_visit;
};

/// Throws std::invalid_argument on a nonpositive time limit, factors outside
/// (0, 1), nonpositive overrides, or m >= 1100 without a depth override.
TsParams resolve_params(const Instance& inst, const SolverConfig& cfg);

struct RunResult {
  Selection best_selection;
  Profit best_objective = 0;
  Weight best_weight = 0;
  /// Seconds from the start of the run until the best was first reached.
  double time_to_best = 0.0;
  double total_time = 0.0;
  std::size_t rounds = 0;
  std::uint64_t seed = 0;
  /// Best objective after each phase (nondecreasing).
  std::vector<Profit> trajectory;

  bool same_outcome(const RunResult& other) const {
    return best_selection == other.best_selection &&
           best_objective == other.best_objective &&
           best_weight == other.best_weight && rounds == other.rounds &&
           seed == other.seed && trajectory == other.trajectory;
  }
};

/// One run: initial solution, then alternating tabu search and perturbation
/// until the budget is spent. The random stream is derived from cfg.seed.
RunResult solve(const Instance& inst, const SolverConfig& cfg);

struct BatchSummary {
  Profit f_best = 0;
  double f_avg = 0.0;
  /// Population standard deviation of the run bests.
  double std = 0.0;
  /// Mean time-to-best in seconds.
  double t_avg = 0.0;
  std::vector<RunResult> per_run;
};

/// Aggregates finished runs. Throws on an empty list.
BatchSummary summarize(std::vector<RunResult> runs);

/// `runs` independent solves with seeds cfg.seed, cfg.seed + 1, ... spread
/// over `workers` threads (0 = hardware concurrency). Results are ordered by
/// run index regardless of completion order.
BatchSummary batch(const Instance& inst, const SolverConfig& cfg,
                   std::size_t runs, std::size_t workers = 0);

} // namespace bmcp
