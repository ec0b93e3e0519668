#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmcp {

using Weight = std::int64_t;
using Profit = std::int64_t;
using Word = std::uint64_t;

/// One bit per item; true means the item is in the knapsack.
using Selection = std::vector<bool>;

inline constexpr std::size_t kWordBits = 64;

inline std::size_t word_count(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Calls fn(j) for each set bit j of the word-wise AND of a and b.
template <typename Fn>
void for_each_common_bit(std::span<const Word> a, std::span<const Word> b,
                         Fn&& fn) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    Word bits = a[w] & b[w];
    while (bits) {
      fn(w * kWordBits + static_cast<std::size_t>(__builtin_ctzll(bits)));
      bits &= bits - 1;
    }
  }
}

/// Raised by parse_instance; the message carries the offending line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Immutable budgeted maximum coverage instance.
///
/// Items and elements are 0-based here; the text format is 1-based. Each
/// item keeps its element set both as a sorted index list and as a packed
/// bit row over the elements.
class Instance {
public:
  /// Throws std::invalid_argument on nonpositive weights or profits,
  /// out-of-range or duplicate element indices, or a negative capacity.
  Instance(Weight capacity, std::vector<Weight> weights,
           std::vector<Profit> profits,
           std::vector<std::vector<std::uint32_t>> rows);

  std::size_t item_count() const { return weights_.size(); }
  std::size_t element_count() const { return profits_.size(); }
  Weight capacity() const { return capacity_; }

  Weight weight(std::size_t item) const { return weights_[item]; }
  Profit profit(std::size_t element) const { return profits_[element]; }
  std::span<const Weight> weights() const { return weights_; }
  std::span<const Profit> profits() const { return profits_; }

  /// Sorted element indices of an item.
  std::span<const std::uint32_t> elements(std::size_t item) const {
    return rows_[item];
  }

  /// Packed incidence row of an item, word_count(element_count()) words.
  std::span<const Word> row_bits(std::size_t item) const {
    return {bits_.data() + item * words_per_row_, words_per_row_};
  }
  std::size_t words_per_row() const { return words_per_row_; }

  /// Number of ones in the incidence matrix.
  std::size_t incidence_count() const;
  double density() const;

  /// Elements contained in no row.
  std::vector<std::uint32_t> uncovered_elements() const;

  bool operator==(const Instance& other) const {
    return capacity_ == other.capacity_ && weights_ == other.weights_ &&
           profits_ == other.profits_ && rows_ == other.rows_;
  }

private:
  Weight capacity_;
  std::vector<Weight> weights_;
  std::vector<Profit> profits_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::size_t words_per_row_;
  std::vector<Word> bits_;
};

/// Reads the `.bmcp` text format. Empty rows and uncovered elements are
/// accepted but reported through `warnings` when it is non-null.
Instance parse_instance(std::istream& in,
                        std::vector<std::string>* warnings = nullptr);
Instance parse_instance(const std::string& text,
                        std::vector<std::string>* warnings = nullptr);
Instance load_instance(const std::string& path,
                       std::vector<std::string>* warnings = nullptr);

void write_instance(std::ostream& out, const Instance& inst);
std::string write_instance(const Instance& inst);

struct IntRange {
  std::int64_t lo;
  std::int64_t hi;
};

struct GeneratorSpec {
  std::size_t items = 0;
  std::size_t elements = 0;
  double density = 0.0;
  Weight capacity = 0;
  IntRange weight_range{1, 100};
  IntRange profit_range{1, 100};
  std::uint64_t seed = 0;
};

/// Random instance: uniform weights and profits, each incidence set with
/// probability `density`, then one uniform incidence added to every empty
/// row and every uncovered element. Deterministic in the spec.
Instance generate_instance(const GeneratorSpec& spec);

/// `bmcp_<m>_<n>_<density>_<capacity>` with the shortest decimal density.
std::string instance_name(std::size_t items, std::size_t elements,
                          double density, Weight capacity);
std::string instance_name(const GeneratorSpec& spec);

/// Profit of the union of the selected items' elements.
Profit full_objective(const Instance& inst, const Selection& sel);
Weight total_weight(const Instance& inst, const Selection& sel);

} // namespace bmcp
