#pragma once

// Shared instances and brute-force oracles. The oracles only use the raw
// instance data and never the incremental or enumeration code under test.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "bmcp/instance.hpp"

namespace bmcp::test {

// m=3, n=3, C=10, w=(4,5,6), p=(3,7,2), E1={1,2}, E2={2,3}, E3={1,3}.
inline const char* kTiny1Text =
    "BMCP 1\n"
    "3 3 10\n"
    "4 5 6\n"
    "3 7 2\n"
    "2 1 2\n"
    "2 2 3\n"
    "2 1 3\n";

inline Instance tiny1(Weight capacity = 10) {
  return Instance(capacity, {4, 5, 6}, {3, 7, 2}, {{0, 1}, {1, 2}, {0, 2}});
}

/// 1-based item list to a selection.
inline Selection pick(std::size_t m, std::initializer_list<std::size_t> items) {
  Selection sel(m, false);
  for (auto i : items) sel[i - 1] = true;
  return sel;
}

inline Profit oracle_objective(const Instance& inst, const Selection& sel) {
  std::set<std::uint32_t> covered;
  for (std::size_t i = 0; i < inst.item_count(); ++i) {
    if (!sel[i]) continue;
    for (auto j : inst.elements(i)) covered.insert(j);
  }
  Profit total = 0;
  for (auto j : covered) total += inst.profit(j);
  return total;
}

inline Weight oracle_weight(const Instance& inst, const Selection& sel) {
  Weight total = 0;
  for (std::size_t i = 0; i < inst.item_count(); ++i) {
    if (sel[i]) total += inst.weight(i);
  }
  return total;
}

inline Selection from_mask(std::size_t m, std::uint64_t mask) {
  Selection sel(m, false);
  for (std::size_t i = 0; i < m; ++i) sel[i] = (mask >> i) & 1u;
  return sel;
}

/// Plain subset enumeration, re-evaluating every subset from scratch.
inline Profit oracle_optimum(const Instance& inst) {
  Profit best = 0;
  const std::size_t m = inst.item_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    auto sel = from_mask(m, mask);
    if (oracle_weight(inst, sel) > inst.capacity()) continue;
    best = std::max(best, oracle_objective(inst, sel));
  }
  return best;
}

inline GeneratorSpec desk_spec(std::uint64_t seed, std::size_t m = 100,
                               std::size_t n = 100, double density = 0.075,
                               Weight capacity = 1500) {
  GeneratorSpec spec;
  spec.items = m;
  spec.elements = n;
  spec.density = density;
  spec.capacity = capacity;
  spec.seed = seed;
  return spec;
}

} // namespace bmcp::test
