#include "bmcp/lp_export.hpp"

#include <ostream>
#include <sstream>

namespace bmcp {

namespace {

constexpr std::size_t kTermsPerLine = 10;

class TermWriter {
public:
  explicit TermWriter(std::ostream& out) : out_(out) {}

  void add(std::int64_t coefficient, char var, std::size_t index) {
    if (count_ > 0 && count_ % kTermsPerLine == 0) out_ << "\n   ";
    if (count_ == 0) {
      if (coefficient < 0) out_ << "- ";
    } else {
      out_ << (coefficient < 0 ? " - " : " + ");
    }
    const auto magnitude = coefficient < 0 ? -coefficient : coefficient;
    if (magnitude != 1) out_ << magnitude << ' ';
    out_ << var << index;
    ++count_;
  }

private:
  std::ostream& out_;
  std::size_t count_ = 0;
};

} // namespace

void write_lp(std::ostream& out, const Instance& inst) {
  const auto m = inst.item_count();
  const auto n = inst.element_count();

  std::vector<std::vector<std::size_t>> covering(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (auto j : inst.elements(i)) covering[j].push_back(i);
  }

  out << "\\ Budgeted maximum coverage: " << m << " items, " << n
      << " elements\n";
  out << "Maximize\n obj: ";
  {
    TermWriter terms(out);
    for (std::size_t j = 0; j < n; ++j) terms.add(inst.profit(j), 'x', j + 1);
  }
  out << "\nSubject To\n capacity: ";
  {
    TermWriter terms(out);
    for (std::size_t i = 0; i < m; ++i) terms.add(inst.weight(i), 'y', i + 1);
  }
  out << " <= " << inst.capacity() << '\n';
  for (std::size_t j = 0; j < n; ++j) {
    out << " cover" << j + 1 << ": ";
    TermWriter terms(out);
    terms.add(1, 'x', j + 1);
    for (auto i : covering[j]) terms.add(-1, 'y', i + 1);
    out << " <= 0\n";
  }
  out << "Binary\n";
  for (std::size_t i = 0; i < m; ++i) out << " y" << i + 1 << '\n';
  for (std::size_t j = 0; j < n; ++j) out << " x" << j + 1 << '\n';
  out << "End\n";
}

std::string export_lp(const Instance& inst) {
  std::ostringstream out;
  write_lp(out, inst);
  return out.str();
}

} // namespace bmcp
