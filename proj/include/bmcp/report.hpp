#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "bmcp/instance.hpp"
#include "bmcp/solver.hpp"

namespace bmcp {

/// `instance,policy,runs,f_best,f_avg,std,t_avg,p_value`
std::string csv_header();

/// f_avg and std with two decimals, t_avg with three, p_value with three
/// significant digits (empty when absent).
std::string csv_row(const std::string& instance, Perturbation policy,
                    const BatchSummary& summary,
                    std::optional<double> p_value = std::nullopt);

/// Instance stem of a path: directories and a trailing `.bmcp` removed.
std::string instance_stem(const std::string& path);

/// One line: the instance name followed by the 1-based selected items.
void write_solution(std::ostream& out, const std::string& name,
                    const Selection& sel);

struct SolutionRecord {
  std::string name;
  Selection selection;
};

/// Throws std::runtime_error on malformed content or indices outside 1..m.
SolutionRecord read_solution(std::istream& in, const Instance& inst);

} // namespace bmcp
