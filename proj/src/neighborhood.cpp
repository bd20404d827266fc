#include "sukp/neighborhood.hpp"

#include <array>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace sukp {

std::int64_t weight_after_move(const Solution& sol,
                               std::span<const std::int32_t> drop,
                               std::span<const std::int32_t> add) {
  assert(drop.size() + add.size() <= 4);
  const Instance& inst = sol.instance();

  // Merge the sorted element lists of the touched items, accumulating the
  // net coverage change per element.
  struct Cursor {
    const std::int32_t* it;
    const std::int32_t* end;
    int delta;
  };
  std::array<Cursor, 4> cur;
  int k = 0;
  for (const std::int32_t i : drop) {
    const auto e = inst.elements_of(i);
    if (!e.empty()) cur[k++] = {e.data(), e.data() + e.size(), -1};
  }
  for (const std::int32_t i : add) {
    const auto e = inst.elements_of(i);
    if (!e.empty()) cur[k++] = {e.data(), e.data() + e.size(), +1};
  }

  std::int64_t weight = sol.weight();
  for (;;) {
    std::int32_t j = std::numeric_limits<std::int32_t>::max();
    for (int c = 0; c < k; ++c) {
      if (cur[c].it != cur[c].end && *cur[c].it < j) j = *cur[c].it;
    }
    if (j == std::numeric_limits<std::int32_t>::max()) break;
    int net = 0;
    for (int c = 0; c < k; ++c) {
      if (cur[c].it != cur[c].end && *cur[c].it == j) {
        net += cur[c].delta;
        ++cur[c].it;
      }
    }
    const int before = sol.coverage(j);
    const bool covered_before = before > 0;
    const bool covered_after = before + net > 0;
    if (covered_before != covered_after) {
      weight += covered_after ? inst.element_weight(j)
                              : -inst.element_weight(j);
    }
  }
  return weight;
}

void apply_move(Solution& sol, const Move& mv) {
  std::int64_t delta = 0;
  for (const std::int32_t i : mv.drop) {
    if (!sol.contains(i)) {
      throw std::logic_error("apply_move: drop item not selected");
    }
    delta -= sol.instance().profit(i);
  }
  for (const std::int32_t i : mv.add) {
    if (sol.contains(i)) {
      throw std::logic_error("apply_move: add item already selected");
    }
    delta += sol.instance().profit(i);
  }
  if (delta != mv.profit_delta) {
    throw std::logic_error("apply_move: stored profit delta is inconsistent");
  }
  for (const std::int32_t i : mv.drop) sol.remove(i);
  for (const std::int32_t i : mv.add) sol.add(i);
}

Move inverse_move(const Move& mv) {
  return Move{mv.add, mv.drop, -mv.profit_delta};
}

std::vector<Move> enumerate_n1(const Solution& sol, std::int64_t best_profit,
                               int threads) {
  return threads > 1 ? detail::enumerate_n1_omp(sol, best_profit, threads)
                     : detail::enumerate_n1_serial(sol, best_profit);
}

std::vector<Move> enumerate_n2_sampled(const Solution& sol,
                                       std::int64_t best_profit, double rho,
                                       Rng& rng, int threads) {
  return threads > 1
             ? detail::enumerate_n2_sampled_omp(sol, best_profit, rho, rng,
                                                threads)
             : detail::enumerate_n2_sampled_serial(sol, best_profit, rho, rng);
}

std::optional<N3Choice> best_n3_move(const Solution& sol,
                                     const TabuState& tabu,
                                     std::int64_t best_profit,
                                     bool allow_aspiration, Rng& rng,
                                     int threads) {
  return threads > 1
             ? detail::best_n3_move_omp(sol, tabu, best_profit,
                                        allow_aspiration, rng, threads)
             : detail::best_n3_move_serial(sol, tabu, best_profit,
                                           allow_aspiration, rng);
}

}  // namespace sukp
