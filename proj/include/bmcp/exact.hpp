#pragma once

#include <cstddef>

#include "bmcp/instance.hpp"

namespace bmcp {

inline constexpr std::size_t kExactMaxItems = 25;

struct ExactResult {
  Profit objective = 0;
  Selection selection;
};

/// Optimum by enumerating all 2^m selections (Gray-code order, incremental
/// coverage). Among optimal selections the one whose sorted item list is
/// lexicographically smallest is returned. Throws std::invalid_argument when
/// m > kExactMaxItems.
ExactResult exact_optimum(const Instance& inst);

} // namespace bmcp
