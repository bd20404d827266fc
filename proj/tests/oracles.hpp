#pragma once

// Test-only reference implementations. Everything here recomputes from
// scratch against the raw Instance accessors and stays independent of the
// library's incremental machinery, so it can serve as the second route in
// equivalence checks.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "sukp/instance.hpp"
#include "sukp/rand.hpp"
#include "sukp/solution.hpp"

namespace oracle {

using ItemSet = std::set<int>;

std::int64_t set_profit(const sukp::Instance& inst, const ItemSet& sel);
std::int64_t union_weight(const sukp::Instance& inst, const ItemSet& sel);

// All capacity-feasible neighbor item sets with profit strictly above
// best_profit, per operator family.
std::set<ItemSet> n1_neighbors(const sukp::Instance& inst, const ItemSet& sel,
                               std::int64_t best_profit);
std::set<ItemSet> n2_neighbors(const sukp::Instance& inst, const ItemSet& sel,
                               std::int64_t best_profit);

// Exhaustive best swap3 move (add / drop / exchange), ignoring tabu state.
struct N3Exhaustive {
  bool any = false;
  std::int64_t best_delta = 0;
  std::set<ItemSet> argmax_results;  // resulting item sets attaining it
};
N3Exhaustive n3_best(const sukp::Instance& inst, const ItemSet& sel);

// Optimum by enumerating every subset with a from-scratch evaluation.
std::int64_t naive_optimum(const sukp::Instance& inst);

// A random capacity-feasible solution: items visited in shuffled order, each
// added while it fits, stopping early now and then.
sukp::Solution random_feasible_solution(const sukp::Instance& inst,
                                        sukp::Rng& rng);

ItemSet as_set(const sukp::Solution& sol);

}  // namespace oracle
