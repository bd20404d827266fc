#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sukp/rand.hpp"
#include "sukp/solution.hpp"

namespace sukp {

// A swap move: remove the `drop` items from the selection and insert the
// `add` items. Both lists are ascending; drop items must be selected, add
// items must not, and the lists are disjoint.
struct Move {
  std::vector<std::int32_t> drop;
  std::vector<std::int32_t> add;
  std::int64_t profit_delta = 0;

  bool operator==(const Move&) const = default;
};

// Per-item tabu expiry measured in applied-move counts: item i may not take
// part in a move while iteration < expiry[i].
struct TabuState {
  explicit TabuState(int num_items) : expiry(num_items, 0) {}
  bool is_tabu(int item) const { return iteration < expiry[item]; }

  std::vector<std::int64_t> expiry;
  std::int64_t iteration = 0;
};

// Union weight the solution would have after removing `drop` and inserting
// `add`. Pure; costs the total length of the touched element lists. At most
// four items may be touched.
std::int64_t weight_after_move(const Solution& sol,
                               std::span<const std::int32_t> drop,
                               std::span<const std::int32_t> add);

// Applies drops, then adds. Throws std::logic_error when the move does not
// match the solution or its stored profit_delta is inconsistent.
void apply_move(Solution& sol, const Move& mv);

// The move that undoes `mv`.
Move inverse_move(const Move& mv);

struct N3Choice {
  Move move;
  bool aspiration = false;  // contained a tabu item, admitted on quality
};

// Neighborhood kernels. Candidates are scanned in a fixed canonical order
// (documented in the implementations), so for a given rng state the results
// are fully deterministic. threads > 1 routes to the OpenMP variant, which
// evaluates candidate weights in parallel and returns results identical to
// the serial reference for any thread count.

// Add and 1-for-1 exchange moves that keep the capacity satisfied and whose
// resulting profit strictly exceeds best_profit.
std::vector<Move> enumerate_n1(const Solution& sol, std::int64_t best_profit,
                               int threads = 1);

// (2,1), (1,2) and (2,2) swaps. Every candidate is first kept with
// probability rho (one rng draw per candidate, before any evaluation);
// survivors then face the same capacity and strict-improvement checks as N1.
std::vector<Move> enumerate_n2_sampled(const Solution& sol,
                                       std::int64_t best_profit, double rho,
                                       Rng& rng, int threads = 1);

// Best add / drop / 1-for-1 exchange among the capacity-feasible moves whose
// items are all non-tabu or (with allow_aspiration) whose resulting profit
// exceeds best_profit. Ties are broken uniformly at random. Worsening moves
// are returned when nothing better is admissible; nullopt when no move is
// admissible at all.
std::optional<N3Choice> best_n3_move(const Solution& sol,
                                     const TabuState& tabu,
                                     std::int64_t best_profit,
                                     bool allow_aspiration, Rng& rng,
                                     int threads = 1);

namespace detail {

std::vector<Move> enumerate_n1_serial(const Solution& sol,
                                      std::int64_t best_profit);
std::vector<Move> enumerate_n2_sampled_serial(const Solution& sol,
                                              std::int64_t best_profit,
                                              double rho, Rng& rng);
std::optional<N3Choice> best_n3_move_serial(const Solution& sol,
                                            const TabuState& tabu,
                                            std::int64_t best_profit,
                                            bool allow_aspiration, Rng& rng);

std::vector<Move> enumerate_n1_omp(const Solution& sol,
                                   std::int64_t best_profit, int threads);
std::vector<Move> enumerate_n2_sampled_omp(const Solution& sol,
                                           std::int64_t best_profit,
                                           double rho, Rng& rng, int threads);
std::optional<N3Choice> best_n3_move_omp(const Solution& sol,
                                         const TabuState& tabu,
                                         std::int64_t best_profit,
                                         bool allow_aspiration, Rng& rng,
                                         int threads);

}  // namespace detail

}  // namespace sukp
