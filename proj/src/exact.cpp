#include "sukp/exact.hpp"

#include <bit>
#include <stdexcept>

namespace sukp {

ExactResult brute_force(const Instance& inst, int max_items) {
  const int m = inst.num_items();
  if (max_items < 1 || max_items > 30) {
    throw std::invalid_argument("brute_force: max_items must lie in [1, 30]");
  }
  if (m > max_items) {
    throw std::invalid_argument(
        "brute_force: instance has " + std::to_string(m) +
        " items, limit is " + std::to_string(max_items));
  }

  // Gray-code walk: subset k differs from k-1 exactly in bit ctz(k), so one
  // item toggle per step keeps the coverage counts current.
  std::vector<std::int32_t> coverage(inst.num_elements(), 0);
  std::int64_t profit = 0;
  std::int64_t weight = 0;
  std::uint32_t mask = 0;

  std::int64_t best_profit = 0;  // the empty set is feasible
  std::uint32_t best_mask = 0;

  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t k = 1; k < total; ++k) {
    const int item = std::countr_zero(k);
    const std::uint32_t bit = std::uint32_t{1} << item;
    if (mask & bit) {
      mask &= ~bit;
      profit -= inst.profit(item);
      for (const std::int32_t j : inst.elements_of(item)) {
        if (--coverage[j] == 0) weight -= inst.element_weight(j);
      }
    } else {
      mask |= bit;
      profit += inst.profit(item);
      for (const std::int32_t j : inst.elements_of(item)) {
        if (coverage[j]++ == 0) weight += inst.element_weight(j);
      }
    }
    if (weight <= inst.capacity() && profit > best_profit) {
      best_profit = profit;
      best_mask = mask;
    }
  }

  ExactResult result;
  result.optimal_profit = best_profit;
  result.subsets_enumerated = total;
  for (int i = 0; i < m; ++i) {
    if (best_mask >> i & 1) result.optimal_set.push_back(i);
  }
  return result;
}

}  // namespace sukp
