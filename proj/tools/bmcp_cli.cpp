// Command-line front end: generate, solve, batch, exact, export-lp, compare.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmcp/exact.hpp"
#include "bmcp/instance.hpp"
#include "bmcp/lp_export.hpp"
#include "bmcp/report.hpp"
#include "bmcp/solver.hpp"
#include "bmcp/stats.hpp"

namespace {

enum ExitCode { kOk = 0, kIoError = 2, kParseError = 3, kConfigError = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverFlags {
  double time_limit = 600.0;
  double beta = 0.5;
  double gamma = 0.5;
  std::optional<std::int64_t> depth;
  std::optional<std::int64_t> tenure;
  std::string perturbation = "probability";
  bool carry = false;
  std::uint64_t seed = 0;
  std::optional<std::size_t> rounds;

  void attach(CLI::App* cmd) {
    cmd->add_option("--time-limit", time_limit, "Seconds per run")
        ->capture_default_str();
    cmd->add_option("--beta", beta, "Reward factor in (0,1)")->capture_default_str();
    cmd->add_option("--gamma", gamma, "Penalization factor in (0,1)")
        ->capture_default_str();
    cmd->add_option("--depth", depth,
                    "Tabu depth override (required for m >= 1100)");
    cmd->add_option("--tenure", tenure, "Tabu tenure override");
    cmd->add_option("--perturbation", perturbation, "probability | random")
        ->capture_default_str();
    cmd->add_flag("--carry-probability", carry,
                  "Keep the learned vector across tabu phases");
    cmd->add_option("--seed", seed, "Base random seed")->capture_default_str();
    cmd->add_option("--rounds", rounds,
                    "Run a fixed number of tabu phases instead of the clock");
  }

  bmcp::SolverConfig config() const {
    bmcp::SolverConfig cfg;
    cfg.time_limit = time_limit;
    cfg.reward_factor = beta;
    cfg.penalty_factor = gamma;
    cfg.depth_override = depth;
    cfg.tenure_override = tenure;
    cfg.perturbation = bmcp::parse_perturbation(perturbation);
    cfg.carry_probability = carry;
    cfg.seed = seed;
    cfg.rounds = rounds;
    return cfg;
  }
};

bmcp::Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance file " + path);
  std::vector<std::string> warnings;
  auto inst = bmcp::parse_instance(in, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << '\n';
  return inst;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  return out;
}

void write_solution_file(const std::string& path, const std::string& name,
                         const bmcp::Selection& sel) {
  auto out = open_output(path);
  bmcp::write_solution(out, name, sel);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budgeted maximum coverage toolkit"};
  app.require_subcommand(1);

  bmcp::GeneratorSpec gen;
  std::string out_dir = ".";
  auto* generate = app.add_subcommand("generate", "Write a random .bmcp instance");
  generate->add_option("--m", gen.items, "Item count")->required();
  generate->add_option("--n", gen.elements, "Element count")->required();
  generate->add_option("--density", gen.density, "Incidence density")->required();
  generate->add_option("--capacity", gen.capacity, "Knapsack capacity")->required();
  generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  generate->add_option("--weight-min", gen.weight_range.lo)->capture_default_str();
  generate->add_option("--weight-max", gen.weight_range.hi)->capture_default_str();
  generate->add_option("--profit-min", gen.profit_range.lo)->capture_default_str();
  generate->add_option("--profit-max", gen.profit_range.hi)->capture_default_str();
  generate->add_option("--output-dir", out_dir, "Directory for the file")
      ->capture_default_str();

  std::string instance_path;
  std::string solution_path;
  bool no_header = false;
  SolverFlags flags;
  auto* solve = app.add_subcommand("solve", "Single run on one instance");
  solve->add_option("--instance", instance_path)->required();
  solve->add_option("--solution", solution_path,
                    "Solution file (default <instance>.sol)");
  solve->add_flag("--no-header", no_header, "Omit the CSV header");
  flags.attach(solve);

  std::size_t runs = 30;
  std::size_t jobs = 0;
  auto* batch = app.add_subcommand("batch", "Independent runs with seeds seed..seed+runs-1");
  batch->add_option("--instance", instance_path)->required();
  batch->add_option("--runs", runs)->capture_default_str();
  batch->add_option("--jobs", jobs, "Worker threads (0 = all cores)")
      ->capture_default_str();
  batch->add_option("--solution", solution_path,
                    "Solution file (default <instance>.sol)");
  batch->add_flag("--no-header", no_header, "Omit the CSV header");
  flags.attach(batch);

  auto* exact = app.add_subcommand("exact", "Optimum by enumeration (m <= 25)");
  exact->add_option("--instance", instance_path)->required();
  exact->add_option("--solution", solution_path, "Also write a solution file");

  std::string lp_path;
  auto* export_lp = app.add_subcommand("export-lp", "Write the 0-1 program as an LP file");
  export_lp->add_option("--instance", instance_path)->required();
  export_lp->add_option("--output", lp_path, "LP file (default stdout)");

  std::vector<std::string> compare_paths;
  auto* compare = app.add_subcommand(
      "compare", "Probability vs random perturbation with a Wilcoxon test");
  compare->add_option("--instance", compare_paths,
                      "Instances (repeatable); several are paired by f_avg, "
                      "a single one by run")
      ->required();
  compare->add_option("--runs", runs)->capture_default_str();
  compare->add_option("--jobs", jobs, "Worker threads (0 = all cores)")
      ->capture_default_str();
  compare->add_flag("--no-header", no_header, "Omit the CSV header");
  flags.attach(compare);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      auto inst = bmcp::generate_instance(gen);
      const auto path = (std::filesystem::path(out_dir) /
                         (bmcp::instance_name(gen) + ".bmcp")).string();
      auto out = open_output(path);
      bmcp::write_instance(out, inst);
      std::cout << path << '\n';
    } else if (*solve || *batch) {
      const auto inst = read_instance(instance_path);
      const auto name = bmcp::instance_stem(instance_path);
      const auto cfg = flags.config();
      auto summary = *solve ? bmcp::summarize({bmcp::solve(inst, cfg)})
                            : bmcp::batch(inst, cfg, runs, jobs);
      if (!no_header) std::cout << bmcp::csv_header() << '\n';
      std::cout << bmcp::csv_row(name, cfg.perturbation, summary) << '\n';
      const auto& best = *std::max_element(
          summary.per_run.begin(), summary.per_run.end(),
          [](const auto& a, const auto& b) { return a.best_objective < b.best_objective; });
      write_solution_file(solution_path.empty() ? name + ".sol" : solution_path,
                          name, best.best_selection);
    } else if (*exact) {
      const auto inst = read_instance(instance_path);
      const auto name = bmcp::instance_stem(instance_path);
      const auto result = bmcp::exact_optimum(inst);
      std::cout << "optimum " << result.objective << '\n';
      bmcp::write_solution(std::cout, name, result.selection);
      if (!solution_path.empty()) {
        write_solution_file(solution_path, name, result.selection);
      }
    } else if (*export_lp) {
      const auto inst = read_instance(instance_path);
      if (lp_path.empty()) {
        bmcp::write_lp(std::cout, inst);
      } else {
        auto out = open_output(lp_path);
        bmcp::write_lp(out, inst);
      }
    } else if (*compare) {
      struct Row {
        std::string name;
        bmcp::BatchSummary plts;
        bmcp::BatchSummary plts0;
      };
      std::vector<Row> rows;
      for (const auto& path : compare_paths) {
        const auto inst = read_instance(path);
        auto cfg = flags.config();
        cfg.perturbation = bmcp::Perturbation::Probability;
        auto plts = bmcp::batch(inst, cfg, runs, jobs);
        cfg.perturbation = bmcp::Perturbation::Random;
        auto plts0 = bmcp::batch(inst, cfg, runs, jobs);
        rows.push_back({bmcp::instance_stem(path), std::move(plts), std::move(plts0)});
      }
      bmcp::PairedSample sample;
      if (rows.size() == 1) {
        for (std::size_t r = 0; r < runs; ++r) {
          sample.emplace_back(
              static_cast<double>(rows[0].plts.per_run[r].best_objective),
              static_cast<double>(rows[0].plts0.per_run[r].best_objective));
        }
      } else {
        for (const auto& row : rows) sample.emplace_back(row.plts.f_avg, row.plts0.f_avg);
      }
      const auto test = bmcp::wilcoxon_signed_rank(sample);
      if (!no_header) std::cout << bmcp::csv_header() << '\n';
      for (const auto& row : rows) {
        std::cout << bmcp::csv_row(row.name, bmcp::Perturbation::Probability,
                                   row.plts, test.p_value) << '\n';
        std::cout << bmcp::csv_row(row.name, bmcp::Perturbation::Random,
                                   row.plts0, test.p_value) << '\n';
      }
      std::size_t wins = 0, ties = 0;
      for (const auto& row : rows) {
        if (row.plts.f_avg > row.plts0.f_avg) ++wins;
        if (row.plts.f_avg == row.plts0.f_avg) ++ties;
      }
      std::fprintf(stderr,
                   "wilcoxon: p=%.3g W+=%.1f W-=%.1f pairs=%zu (%s); "
                   "probability better on %zu/%zu instances, tied on %zu\n",
                   test.p_value, test.w_plus, test.w_minus, test.nonzero,
                   test.exact ? "exact" : "normal approximation", wins,
                   rows.size(), ties);
    }
  } catch (const IoError& e) {
    std::cerr << "error (I/O): " << e.what() << '\n';
    return kIoError;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error (I/O): " << e.what() << '\n';
    return kIoError;
  } catch (const bmcp::ParseError& e) {
    std::cerr << "error (parse): " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error (config): " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kOk;
}
