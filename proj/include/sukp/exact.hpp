#pragma once

#include <cstdint>
#include <vector>

#include "sukp/instance.hpp"

namespace sukp {

struct ExactResult {
  std::int64_t optimal_profit = 0;
  std::vector<int> optimal_set;  // one maximizing item set, ascending
  std::uint64_t subsets_enumerated = 0;
};

// Exhaustive optimum over all 2^m item subsets, visited in Gray-code order so
// each step toggles a single item against a locally maintained coverage
// vector. The empty set (profit 0) is a valid answer. Throws
// std::invalid_argument when the instance has more than max_items items.
ExactResult brute_force(const Instance& inst, int max_items = 25);

}  // namespace sukp
