#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bmcp/exact.hpp"
#include "bmcp/lp_export.hpp"
#include "bmcp/report.hpp"
#include "bmcp/stats.hpp"
#include "fixtures.hpp"
#include "lp_oracle.hpp"

using namespace bmcp;
using namespace bmcp::test;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Wilcoxon two-sided p by listing all 2^k sign assignments.
double enumerate_wilcoxon(const PairedSample& sample) {
  std::vector<double> d;
  for (auto [a, b] : sample) {
    if (a != b) d.push_back(a - b);
  }
  const std::size_t k = d.size();
  std::vector<double> rank(k);
  for (std::size_t i = 0; i < k; ++i) {
    double smaller = 0, equal = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (std::abs(d[j]) < std::abs(d[i])) ++smaller;
      if (std::abs(d[j]) == std::abs(d[i])) ++equal;
    }
    rank[i] = smaller + (equal + 1) / 2;
  }
  double observed = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (d[i] > 0) observed += rank[i];
  }
  double le = 0, ge = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    double w = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) w += rank[i];
    }
    if (w <= observed + 1e-9) ++le;
    if (w >= observed - 1e-9) ++ge;
  }
  const double total = std::ldexp(1.0, static_cast<int>(k));
  return std::min(1.0, 2 * std::min(le, ge) / total);
}

} // namespace

TEST_CASE("exact optimum") {
  auto r = exact_optimum(tiny1());
  CHECK(r.objective == 12);
  CHECK(r.selection == pick(3, {1, 2}));

  r = exact_optimum(tiny1(0));
  CHECK(r.objective == 0);
  CHECK(r.selection == pick(3, {}));

  const Instance single(5, {3}, {4, 6, 1}, {{0, 1, 2}});
  r = exact_optimum(single);
  CHECK(r.objective == 11);
  CHECK(r.selection == pick(1, {1}));

  std::vector<Weight> w(26, 1);
  std::vector<std::vector<std::uint32_t>> rows(26, {0});
  CHECK_THROWS_AS(exact_optimum(Instance(3, w, {1}, rows)), std::invalid_argument);
}

TEST_CASE("exact optimum agrees with plain enumeration") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto inst = generate_instance(desk_spec(seed, 10, 14, 0.2, 150));
    const auto r = exact_optimum(inst);
    CHECK(r.objective == oracle_optimum(inst));
    CHECK(oracle_objective(inst, r.selection) == r.objective);
    CHECK(oracle_weight(inst, r.selection) <= inst.capacity());
  }
}

TEST_CASE("LP export golden file") {
  CHECK(export_lp(tiny1()) == read_file(BMCP_TEST_DATA_DIR "/tiny1.lp"));
  const auto text = export_lp(tiny1());
  CHECK(text.find("3 x1 + 7 x2 + 2 x3") != std::string::npos);
  CHECK(text.find("4 y1 + 5 y2 + 6 y3 <= 10") != std::string::npos);
  CHECK(text.find("x2 - y1 - y2 <= 0") != std::string::npos);

  const auto minimal = export_lp(Instance(1, {1}, {1}, {{0}}));
  CHECK(minimal.find(" cover1: x1 - y1 <= 0\n") != std::string::npos);
}

TEST_CASE("LP export structure and fidelity") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto inst = generate_instance(desk_spec(seed, 8 + seed, 30, 0.1, 120));
    const auto model = parse_lp(export_lp(inst));
    CHECK(model.rows.size() == 1 + inst.element_count());
    CHECK(model.binaries.size() == inst.item_count() + inst.element_count());
    CHECK(model.objective.size() == inst.element_count());
    CHECK(brute_force_lp(model) == exact_optimum(inst).objective);
  }
  CHECK(brute_force_lp(parse_lp(export_lp(tiny1()))) == 12);
}

TEST_CASE("Wilcoxon signed-rank") {
  PairedSample same{{1, 1}, {2, 2}, {5, 5}};
  CHECK(wilcoxon_signed_rank(same).p_value == 1.0);
  CHECK(wilcoxon_signed_rank(same).nonzero == 0);

  PairedSample positive{{2, 1}, {4, 2}, {7, 4}, {9, 5}, {10, 5}};
  const auto r = wilcoxon_signed_rank(positive);
  CHECK(r.p_value == 0.0625);
  CHECK(r.w_plus == 15.0);
  CHECK(r.exact);

  CHECK_THROWS_AS(wilcoxon_signed_rank({}), std::invalid_argument);

  PairedSample twelve;
  for (double d : {1.5, -2.0, 3.0, 4.0, -5.0, 6.0, 7.0, 8.0, -9.0, 10.0, 11.0, 12.0}) {
    twelve.emplace_back(d, 0.0);
  }
  CHECK(wilcoxon_signed_rank(twelve).p_value ==
        doctest::Approx(0.0771484375).epsilon(1e-12));
}

TEST_CASE("Wilcoxon exact path matches full enumeration") {
  Rng rng(10);
  for (int trial = 0; trial < 60; ++trial) {
    PairedSample sample;
    const std::size_t k = 1 + rng.below(14);
    for (std::size_t i = 0; i < k; ++i) {
      // Small integer range forces ties and zero differences.
      sample.emplace_back(static_cast<double>(rng.below(7)),
                          static_cast<double>(rng.below(7)));
    }
    const auto r = wilcoxon_signed_rank(sample);
    if (r.nonzero == 0) {
      CHECK(r.p_value == 1.0);
      continue;
    }
    CHECK(r.p_value == doctest::Approx(enumerate_wilcoxon(sample)).epsilon(1e-12));
  }
}

TEST_CASE("Wilcoxon normal approximation above twenty pairs") {
  PairedSample ranks;
  for (int i = 1; i <= 25; ++i) ranks.emplace_back(i, 0.0);
  auto r = wilcoxon_signed_rank(ranks);
  CHECK_FALSE(r.exact);
  CHECK(r.p_value == doctest::Approx(1.3070605478013029e-05).epsilon(1e-9));

  PairedSample mixed;
  for (double d : {3, -1, 4, 1, -5, 9, 2, -6, 5, 3, 5, -8, 9, 7, 9,
                   3, 2, 3, 8, 4, 6, 2, -6, 4, 3, 3, 8, -3, 2, 7}) {
    mixed.emplace_back(d, 0.0);
  }
  r = wilcoxon_signed_rank(mixed);
  CHECK(r.p_value == doctest::Approx(0.00555589887517825).epsilon(1e-9));
}

TEST_CASE("CSV rows") {
  std::vector<RunResult> runs(30);
  for (auto& run : runs) {
    run.best_objective = 70677;
    run.time_to_best = 61.2424;
  }
  const auto s = summarize(runs);
  CHECK(csv_header() == "instance,policy,runs,f_best,f_avg,std,t_avg,p_value");
  CHECK(csv_row("bmcp_585_600_0.075_1500", Perturbation::Probability, s) ==
        "bmcp_585_600_0.075_1500,probability,30,70677,70677.00,0.00,61.242,");
  CHECK(csv_row("x", Perturbation::Random, s, 0.0123456) ==
        "x,random,30,70677,70677.00,0.00,61.242,0.0123");
}

TEST_CASE("solution files re-validate against the instance") {
  const auto inst = generate_instance(desk_spec(4, 20, 25, 0.15, 300));
  const auto best = exact_optimum(inst);
  std::stringstream io;
  write_solution(io, "demo", best.selection);
  const auto rec = read_solution(io, inst);
  CHECK(rec.name == "demo");
  CHECK(rec.selection == best.selection);
  CHECK(oracle_objective(inst, rec.selection) == best.objective);
  CHECK(oracle_weight(inst, rec.selection) <= inst.capacity());

  std::stringstream bad("demo 1 99\n");
  CHECK_THROWS_AS(read_solution(bad, inst), std::runtime_error);
  CHECK(instance_stem("/tmp/dir/bmcp_1_1_0.5_3.bmcp") == "bmcp_1_1_0.5_3");
}
