#include "bmcp/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bmcp/probability.hpp"

namespace bmcp {

std::string to_string(Perturbation policy) {
  return policy == Perturbation::Probability ? "probability" : "random";
}

Perturbation parse_perturbation(const std::string& name) {
  if (name == "probability" || name == "plts") return Perturbation::Probability;
  if (name == "random" || name == "plts0") return Perturbation::Random;
  throw std::invalid_argument("unknown perturbation policy '" + name + "'");
}

TsParams resolve_params(const Instance& inst, const SolverConfig& cfg) {
  if (!cfg.rounds && !(cfg.time_limit > 0.0)) {
    throw std::invalid_argument("time limit must be positive");
  }
  if (cfg.rounds && *cfg.rounds == 0) {
    throw std::invalid_argument("round count must be positive");
  }
  if (cfg.depth_override && *cfg.depth_override < 1) {
    throw std::invalid_argument("depth override must be positive");
  }
  if (cfg.tenure_override && *cfg.tenure_override < 1) {
    throw std::invalid_argument("tenure override must be positive");
  }
  // Validates the factors.
  ProbabilityVector(1, cfg.reward_factor, cfg.penalty_factor);
  TsParams params;
  params.depth = cfg.depth_override ? *cfg.depth_override
                                    : tabu_depth(inst.item_count());
  params.tenure = cfg.tenure_override
                      ? *cfg.tenure_override
                      : tabu_tenure(inst.item_count(), inst.element_count());
  return params;
}

RunResult solve(const Instance& inst, const SolverConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed = [&start] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  const TsParams params = resolve_params(inst, cfg);
  Rng rng = Rng(cfg.seed).split(0);
  ProbabilityVector prob(inst.item_count(), cfg.reward_factor,
                         cfg.penalty_factor);

  SearchState current = initial_solution(inst, rng);
  SearchState best = current;
  RunResult result;
  result.seed = cfg.seed;
  result.time_to_best = elapsed();

  auto keep_going = [&] {
    if (cfg.rounds) return result.rounds < *cfg.rounds;
    return elapsed() <= cfg.time_limit;
  };

  while (keep_going()) {
    if (!cfg.carry_probability) prob.reset();
    auto phase = tabu_search(std::move(current), prob, params, rng, cfg.on_visit);
    ++result.rounds;
    if (phase.best.objective() > best.objective()) {
      best = phase.best;
      result.time_to_best = elapsed();
    }
    result.trajectory.push_back(best.objective());
    Selection next = cfg.perturbation == Perturbation::Probability
                         ? probability_perturbation(phase.best, prob, rng)
                         : random_perturbation(phase.best, rng);
    current = SearchState(inst, std::move(next));
  }

  result.best_selection = best.selection();
  result.best_objective = best.objective();
  result.best_weight = best.total_weight();
  result.total_time = elapsed();
  return result;
}

BatchSummary summarize(std::vector<RunResult> runs) {
  if (runs.empty()) throw std::invalid_argument("no runs to summarize");
  BatchSummary s;
  const double count = static_cast<double>(runs.size());
  s.f_best = runs.front().best_objective;
  double sum = 0.0;
  double time_sum = 0.0;
  for (const auto& r : runs) {
    s.f_best = std::max(s.f_best, r.best_objective);
    sum += static_cast<double>(r.best_objective);
    time_sum += r.time_to_best;
  }
  s.f_avg = sum / count;
  double squares = 0.0;
  for (const auto& r : runs) {
    const double d = static_cast<double>(r.best_objective) - s.f_avg;
    squares += d * d;
  }
  s.std = std::sqrt(squares / count);
  s.t_avg = time_sum / count;
  s.per_run = std::move(runs);
  return s;
}

BatchSummary batch(const Instance& inst, const SolverConfig& cfg,
                   std::size_t runs, std::size_t workers) {
  if (runs == 0) throw std::invalid_argument("batch needs at least one run");
  resolve_params(inst, cfg);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, runs);

  std::vector<RunResult> results(runs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t r = next++; r < runs; r = next++) {
      try {
        SolverConfig run_cfg = cfg;
        run_cfg.seed = cfg.seed + r;
        results[r] = solve(inst, run_cfg);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(std::move(results));
}

} // namespace bmcp
