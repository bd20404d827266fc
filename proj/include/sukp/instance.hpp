#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sukp {

// Raised by the instance parser; carries the 1-based line of the offending
// token.
struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message);
  int line;
};

// A set-union knapsack instance: items carry profits and reference a subset
// of weighted elements; the weight of an item set is the weight of the union
// of the referenced elements, each counted once. Immutable after
// construction, so it can be shared read-only across concurrent runs.
class Instance {
 public:
  // Canonical text format:
  //   line 1:         m n C
  //   line 2:         m item profits
  //   line 3:         n element weights
  //   lines 4..m+3:   n 0/1 values (row i lists the elements of item i)
  // '#' starts a comment, blank lines are skipped, and tokens may in fact be
  // split across lines arbitrarily. Values must be integers; profits,
  // weights and the capacity must be positive, and every item needs at
  // least one element.
  static Instance parse(std::istream& in);
  static Instance parse(const std::string& text);
  static Instance load(const std::string& path);

  // Random instance with exactly round(density * m * n) incidence entries
  // spread uniformly (every item keeps at least one element), profits
  // uniform in [1, 500], weights uniform in [1, 100], and capacity
  // round(capacity_ratio * total element weight). Pure in its arguments:
  // the same seed always yields the same instance.
  static Instance generate(int items, int elements, double density,
                           double capacity_ratio, std::uint64_t seed);

  int num_items() const { return m_; }
  int num_elements() const { return n_; }
  std::int64_t profit(int item) const { return profits_[item]; }
  std::int64_t element_weight(int element) const { return weights_[element]; }
  std::int64_t capacity() const { return capacity_; }
  std::int64_t total_element_weight() const { return total_weight_; }

  std::span<const std::int32_t> elements_of(int item) const {
    return item_elements_[item];
  }
  bool contains(int item, int element) const {
    return incidence_[static_cast<std::size_t>(item) * n_ + element] != 0;
  }

  // Sum of the weights of one item's elements. Throws std::out_of_range.
  std::int64_t item_weight(int item) const;

  // Fraction of ones in the item/element incidence relation (the first
  // decimal of the usual m_n_density_ratio instance naming scheme).
  double density() const;
  // capacity / total element weight (the second decimal of the scheme).
  double capacity_ratio() const;

  // Degenerate but accepted: the capacity admits all items at once.
  bool capacity_exceeds_total_weight() const {
    return capacity_ > total_weight_;
  }

  void serialize(std::ostream& out) const;
  std::string serialize() const;

  bool operator==(const Instance&) const = default;

 private:
  Instance() = default;

  int m_ = 0;
  int n_ = 0;
  std::vector<std::int64_t> profits_;
  std::vector<std::int64_t> weights_;
  std::vector<std::vector<std::int32_t>> item_elements_;  // sorted per item
  std::vector<std::uint8_t> incidence_;                   // m*n, row-major
  std::int64_t capacity_ = 0;
  std::int64_t total_weight_ = 0;
};

}  // namespace sukp
