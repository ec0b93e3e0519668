#include "bmcp/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace bmcp {

namespace {

std::vector<std::size_t> members(const Selection& sel) {
  std::vector<std::size_t> items;
  for (std::size_t i = 0; i < sel.size(); ++i) {
    if (sel[i]) items.push_back(i);
  }
  return items;
}

} // namespace

ExactResult exact_optimum(const Instance& inst) {
  const std::size_t m = inst.item_count();
  if (m > kExactMaxItems) {
    throw std::invalid_argument("exact enumeration limited to " +
                                std::to_string(kExactMaxItems) + " items");
  }
  std::vector<std::size_t> coverage(inst.element_count(), 0);
  Selection sel(m, false);
  Weight weight = 0;
  Profit objective = 0;

  ExactResult best{0, sel};
  std::vector<std::size_t> best_members;

  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto item = static_cast<std::size_t>(__builtin_ctzll(step));
    if (sel[item]) {
      weight -= inst.weight(item);
      for (auto j : inst.elements(item)) {
        if (--coverage[j] == 0) objective -= inst.profit(j);
      }
    } else {
      weight += inst.weight(item);
      for (auto j : inst.elements(item)) {
        if (coverage[j]++ == 0) objective += inst.profit(j);
      }
    }
    sel[item] = !sel[item];
    if (weight > inst.capacity() || objective < best.objective) continue;
    if (objective > best.objective) {
      best = {objective, sel};
      best_members = members(sel);
      continue;
    }
    auto candidate = members(sel);
    if (std::lexicographical_compare(candidate.begin(), candidate.end(),
                                     best_members.begin(), best_members.end())) {
      best.selection = sel;
      best_members = std::move(candidate);
    }
  }
  return best;
}

} // namespace bmcp
