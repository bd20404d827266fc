#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sukp/instance.hpp"

namespace sukp {

// A candidate item set with incrementally maintained profit and union
// weight. coverage(j) counts how many selected items contain element j; the
// element contributes its weight while that count is positive, which makes
// add/remove O(|elements of the item|).
//
// A Solution is a value owned by one search thread; copying yields an
// independent snapshot. Only the referenced Instance is shared.
class Solution {
 public:
  explicit Solution(const Instance& inst);

  const Instance& instance() const { return *inst_; }
  bool contains(int item) const { return in_set_[item] != 0; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::int64_t profit() const { return profit_; }
  std::int64_t weight() const { return weight_; }
  int coverage(int element) const { return coverage_[element]; }
  bool fits_capacity() const { return weight_ <= inst_->capacity(); }

  void add(int item);     // throws std::logic_error if already selected
  void remove(int item);  // throws std::logic_error if not selected

  std::vector<std::int32_t> selected() const;    // ascending
  std::vector<std::int32_t> unselected() const;  // ascending

  // From-scratch recomputations of the cached fields; used as oracles in
  // tests and assertions, never on the search path.
  std::int64_t recompute_profit() const;
  std::int64_t recompute_weight() const;

  // One-line form for logs: "profit=.. weight=.. items=[i1 i2 ..]".
  std::string log_line() const;

  // Full state comparison (selection, coverage and cached totals).
  bool operator==(const Solution& other) const;

 private:
  const Instance* inst_;
  std::vector<std::uint8_t> in_set_;
  std::vector<std::int32_t> coverage_;
  std::int64_t profit_ = 0;
  std::int64_t weight_ = 0;
  int count_ = 0;
};

}  // namespace sukp
