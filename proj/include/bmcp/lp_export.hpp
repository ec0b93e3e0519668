#pragma once

#include <iosfwd>
#include <string>

#include "bmcp/instance.hpp"

namespace bmcp {

/// Writes the 0-1 program in CPLEX LP format:
///
///   Maximize    sum_j p_j x_j
///   Subject To  sum_i w_i y_i <= C
///               x_j - sum_{i : j in E_i} y_i <= 0     for every element j
///   Binary      y_1..y_m, x_1..x_n
///
/// The indicator x_j = [H_j > 0] is replaced by the upper bound x_j <= H_j,
/// which is tight at any optimum because every profit is positive. Long
/// expressions wrap after ten terms onto indented continuation lines.
void write_lp(std::ostream& out, const Instance& inst);
std::string export_lp(const Instance& inst);

} // namespace bmcp
