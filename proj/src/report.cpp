#include "bmcp/report.hpp"

#include <cstdio>
#include <filesystem>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bmcp {

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

} // namespace

std::string csv_header() {
  return "instance,policy,runs,f_best,f_avg,std,t_avg,p_value";
}

std::string csv_row(const std::string& instance, Perturbation policy,
                    const BatchSummary& summary, std::optional<double> p_value) {
  std::string row = instance + "," + to_string(policy) + "," +
                    std::to_string(summary.per_run.size()) + "," +
                    std::to_string(summary.f_best) + "," +
                    fixed(summary.f_avg, 2) + "," + fixed(summary.std, 2) +
                    "," + fixed(summary.t_avg, 3) + ",";
  if (p_value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", *p_value);
    row += buf;
  }
  return row;
}

std::string instance_stem(const std::string& path) {
  std::filesystem::path p(path);
  if (p.extension() == ".bmcp") return p.stem().string();
  return p.filename().string();
}

void write_solution(std::ostream& out, const std::string& name,
                    const Selection& sel) {
  out << name;
  for (std::size_t i = 0; i < sel.size(); ++i) {
    if (sel[i]) out << ' ' << i + 1;
  }
  out << '\n';
}

SolutionRecord read_solution(std::istream& in, const Instance& inst) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty solution file");
  std::istringstream ss(line);
  SolutionRecord record;
  if (!(ss >> record.name)) throw std::runtime_error("missing instance name");
  record.selection.assign(inst.item_count(), false);
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long index = 0;
    try {
      index = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || index < 1 ||
        index > static_cast<long long>(inst.item_count())) {
      throw std::runtime_error("invalid item index '" + tok + "'");
    }
    record.selection[static_cast<std::size_t>(index - 1)] = true;
  }
  return record;
}

} // namespace bmcp
