#include "bmcp/instance.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "bmcp/rng.hpp"

namespace bmcp {

Instance::Instance(Weight capacity, std::vector<Weight> weights,
                   std::vector<Profit> profits,
                   std::vector<std::vector<std::uint32_t>> rows)
    : capacity_(capacity), weights_(std::move(weights)),
      profits_(std::move(profits)), rows_(std::move(rows)) {
  if (weights_.empty() || profits_.empty()) {
    throw std::invalid_argument("instance needs at least one item and element");
  }
  if (rows_.size() != weights_.size()) {
    throw std::invalid_argument("one incidence row per item required");
  }
  if (capacity_ < 0) throw std::invalid_argument("negative capacity");
  for (Weight w : weights_) {
    if (w <= 0) throw std::invalid_argument("nonpositive weight");
  }
  for (Profit p : profits_) {
    if (p <= 0) throw std::invalid_argument("nonpositive profit");
  }
  words_per_row_ = word_count(profits_.size());
  bits_.assign(words_per_row_ * weights_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    auto& row = rows_[i];
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] >= profits_.size()) {
        throw std::invalid_argument("element index out of range");
      }
      if (k > 0 && row[k] <= row[k - 1]) {
        throw std::invalid_argument("incidence row not strictly ascending");
      }
      bits_[i * words_per_row_ + row[k] / kWordBits] |= Word{1}
                                                       << (row[k] % kWordBits);
    }
  }
}

std::size_t Instance::incidence_count() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

double Instance::density() const {
  return static_cast<double>(incidence_count()) /
         (static_cast<double>(item_count()) *
          static_cast<double>(element_count()));
}

std::vector<std::uint32_t> Instance::uncovered_elements() const {
  std::vector<bool> seen(element_count(), false);
  for (const auto& row : rows_) {
    for (auto j : row) seen[j] = true;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 0; j < seen.size(); ++j) {
    if (!seen[j]) out.push_back(j);
  }
  return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

std::int64_t to_int(const std::string& tok, std::size_t line) {
  std::int64_t value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "malformed integer '" + tok + "'");
  }
  return value;
}

std::vector<std::int64_t> positive_list(const std::vector<std::string>& tokens,
                                        std::size_t expected,
                                        std::size_t line, const char* what) {
  if (tokens.size() != expected) {
    throw ParseError(line, std::string("count mismatch: expected ") +
                               std::to_string(expected) + " " + what +
                               ", found " + std::to_string(tokens.size()));
  }
  std::vector<std::int64_t> values;
  values.reserve(expected);
  for (const auto& tok : tokens) {
    auto v = to_int(tok, line);
    if (v <= 0) throw ParseError(line, std::string("nonpositive ") + what);
    values.push_back(v);
  }
  return values;
}

} // namespace

Instance parse_instance(std::istream& in, std::vector<std::string>* warnings) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && tokenize(lines.back()).empty()) lines.pop_back();

  auto line_tokens = [&](std::size_t number, const char* what) {
    if (number > lines.size()) {
      throw ParseError(number, std::string("count mismatch: missing ") + what);
    }
    return tokenize(lines[number - 1]);
  };

  auto magic = line_tokens(1, "header");
  if (magic.size() != 2 || magic[0] != "BMCP" || magic[1] != "1") {
    throw ParseError(1, "malformed header: expected 'BMCP 1'");
  }
  auto dims = line_tokens(2, "dimensions");
  if (dims.size() != 3) {
    throw ParseError(2, "malformed header: expected 'm n C'");
  }
  const auto m = to_int(dims[0], 2);
  const auto n = to_int(dims[1], 2);
  const auto capacity = to_int(dims[2], 2);
  if (m < 1 || n < 1 || capacity < 0) {
    throw ParseError(2, "malformed header: need m >= 1, n >= 1, C >= 0");
  }
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw ParseError(2, "malformed header: element count too large");
  }
  const auto items = static_cast<std::size_t>(m);
  const auto elements = static_cast<std::size_t>(n);

  auto weights = positive_list(line_tokens(3, "weights"), items, 3, "weight");
  auto profits = positive_list(line_tokens(4, "profits"), elements, 4, "profit");

  std::vector<std::vector<std::uint32_t>> rows(items);
  for (std::size_t i = 0; i < items; ++i) {
    const std::size_t number = 5 + i;
    auto tokens = line_tokens(number, "item rows");
    if (tokens.empty()) throw ParseError(number, "count mismatch: empty row");
    const auto k = to_int(tokens[0], number);
    if (k < 0 || static_cast<std::size_t>(k) != tokens.size() - 1) {
      throw ParseError(number, "count mismatch: row declares " + tokens[0] +
                                   " elements, found " +
                                   std::to_string(tokens.size() - 1));
    }
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      const auto e = to_int(tokens[t], number);
      if (e < 1 || e > n) {
        throw ParseError(number, "index out of range: element " + tokens[t]);
      }
      if (!rows[i].empty() && static_cast<std::uint32_t>(e - 1) <= rows[i].back()) {
        throw ParseError(number, "element indices must be strictly ascending");
      }
      rows[i].push_back(static_cast<std::uint32_t>(e - 1));
    }
    if (warnings && rows[i].empty()) {
      warnings->push_back("line " + std::to_string(number) + ": item " +
                          std::to_string(i + 1) + " covers no element");
    }
  }
  if (lines.size() > 4 + items) {
    throw ParseError(5 + items, "count mismatch: unexpected trailing content");
  }

  Instance inst(capacity, std::move(weights), std::move(profits),
                std::move(rows));
  if (warnings) {
    for (auto j : inst.uncovered_elements()) {
      warnings->push_back("element " + std::to_string(j + 1) +
                          " is not covered by any item");
    }
  }
  return inst;
}

Instance parse_instance(const std::string& text,
                        std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_instance(in, warnings);
}

Instance load_instance(const std::string& path,
                       std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open instance file " + path);
  return parse_instance(in, warnings);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << "BMCP 1\n";
  out << inst.item_count() << ' ' << inst.element_count() << ' '
      << inst.capacity() << '\n';
  auto write_list = [&out](auto values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      out << (k ? " " : "") << values[k];
    }
    out << '\n';
  };
  write_list(inst.weights());
  write_list(inst.profits());
  for (std::size_t i = 0; i < inst.item_count(); ++i) {
    auto row = inst.elements(i);
    out << row.size();
    for (auto j : row) out << ' ' << j + 1;
    out << '\n';
  }
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

Instance generate_instance(const GeneratorSpec& spec) {
  const auto m = spec.items;
  const auto n = spec.elements;
  if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
  if (!(spec.density > 0.0 && spec.density < 1.0)) {
    throw std::invalid_argument("density must lie in (0, 1)");
  }
  if (spec.density * static_cast<double>(n) < 1.0) {
    throw std::invalid_argument("density * n must be at least 1");
  }
  if (spec.capacity <= 0) throw std::invalid_argument("capacity must be positive");
  for (const auto& r : {spec.weight_range, spec.profit_range}) {
    if (r.lo < 1 || r.hi < r.lo) {
      throw std::invalid_argument("ranges need 1 <= lo <= hi");
    }
  }
  constexpr std::size_t kIndexSpace = std::size_t{1} << 32;
  if (n >= kIndexSpace || m > kIndexSpace / n) {
    throw std::invalid_argument("m * n exceeds the incidence index space");
  }

  Rng rng(spec.seed);
  std::vector<Weight> weights(m);
  for (auto& w : weights) w = rng.between(spec.weight_range.lo, spec.weight_range.hi);
  std::vector<Profit> profits(n);
  for (auto& p : profits) p = rng.between(spec.profit_range.lo, spec.profit_range.hi);

  std::vector<std::vector<std::uint32_t>> rows(m);
  std::vector<bool> covered(n, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (rng.open_unit() < spec.density) {
        rows[i].push_back(j);
        covered[j] = true;
      }
    }
  }
  for (auto& row : rows) {
    if (row.empty()) {
      auto j = static_cast<std::uint32_t>(rng.below(n));
      row.push_back(j);
      covered[j] = true;
    }
  }
  for (std::uint32_t j = 0; j < n; ++j) {
    if (covered[j]) continue;
    auto& row = rows[rng.below(m)];
    row.insert(std::lower_bound(row.begin(), row.end(), j), j);
  }
  return Instance(spec.capacity, std::move(weights), std::move(profits),
                  std::move(rows));
}

std::string instance_name(std::size_t items, std::size_t elements,
                          double density, Weight capacity) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, density);
  (void)ec;
  return "bmcp_" + std::to_string(items) + "_" + std::to_string(elements) +
         "_" + std::string(buf, end) + "_" + std::to_string(capacity);
}

std::string instance_name(const GeneratorSpec& spec) {
  return instance_name(spec.items, spec.elements, spec.density, spec.capacity);
}

namespace {
void check_length(const Instance& inst, const Selection& sel) {
  if (sel.size() != inst.item_count()) {
    throw std::invalid_argument("selection length differs from item count");
  }
}
} // namespace

Profit full_objective(const Instance& inst, const Selection& sel) {
  check_length(inst, sel);
  std::vector<bool> covered(inst.element_count(), false);
  Profit total = 0;
  for (std::size_t i = 0; i < inst.item_count(); ++i) {
    if (!sel[i]) continue;
    for (auto j : inst.elements(i)) {
      if (!covered[j]) {
        covered[j] = true;
        total += inst.profit(j);
      }
    }
  }
  return total;
}

Weight total_weight(const Instance& inst, const Selection& sel) {
  check_length(inst, sel);
  Weight total = 0;
  for (std::size_t i = 0; i < inst.item_count(); ++i) {
    if (sel[i]) total += inst.weight(i);
  }
  return total;
}

} // namespace bmcp
