#pragma once

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "sukp/neighborhood.hpp"

namespace sukp {

using Clock = std::chrono::steady_clock;
using Deadline = Clock::time_point;

struct SearchParams {
  int lambda_max = 2;   // non-improving VND+TS rounds tolerated per explore
  double rho = 0.05;    // N2 candidate sampling probability
  int omega_max = 100;  // non-improving tabu-search iterations before it stops
  double eta = 0.5;     // fraction of items replaced by the escape step
  double time_budget = 10.0;  // wall-clock seconds per run
  std::uint64_t seed = 0;
  bool aspiration = true;  // admit tabu moves that beat the best profit
  // Stop the greedy scan at the first item that does not fit instead of
  // scanning the whole ratio order.
  bool greedy_stop_at_overflow = false;
  int eval_threads = 1;  // threads used by the neighborhood kernels

  void validate() const;  // throws std::invalid_argument
};

// Per-item count of applied-move participations since run start; orders the
// victims of the escape step.
struct FrequencyVector {
  explicit FrequencyVector(int num_items) : counts(num_items, 0) {}
  void record(const Move& mv);
  std::int64_t total() const;

  std::vector<std::int64_t> counts;
};

// One applied move plus whether tabu search admitted it through aspiration.
struct MoveLogEntry {
  Move move;
  bool aspiration = false;
};
using MoveLog = std::vector<MoveLogEntry>;

struct RunResult {
  Solution best;
  std::int64_t best_profit = 0;
  double time_to_best = 0.0;  // seconds from run start
  std::int64_t outer_iterations = 0;
  // (elapsed seconds, profit) at each global-best update.
  std::vector<std::pair<double, std::int64_t>> trace;
  bool infeasible = false;  // no single item fits the capacity
};

// Items scanned in descending profit / item-weight ratio; each is added when
// it still fits. By default the scan continues past items that do not fit.
Solution greedy_initial_solution(const Instance& inst,
                                 bool stop_at_overflow = false);

// Iterations an item stays tabu, measured against the current selection
// split: floor(0.4 |A|) inside the selection, floor(0.2 |A-bar| (100/m))
// outside, never less than 1. Exact integer arithmetic.
std::int64_t tabu_tenure(const Solution& sol, int item);

// Best-improvement descent alternating N1 with sampled N2 until neither
// yields a solution above the descent-best, which is returned. Applied moves
// are recorded in freq (and log when given).
Solution vnd(Solution start, const SearchParams& params, FrequencyVector& freq,
             Rng& rng, Deadline deadline, MoveLog* log = nullptr);

struct TsResult {
  Solution best;
  Solution last;
};

// Tabu search over N3: repeatedly applies the best admissible move (possibly
// worsening), marks the moved items tabu for their tenure, and stops after
// omega_max consecutive iterations without improving its own best. Returns
// both that best and the final, possibly worse, solution.
TsResult tabu_search(Solution start, const SearchParams& params,
                     FrequencyVector& freq, Rng& rng, Deadline deadline,
                     MoveLog* log = nullptr);

// Exploration loop: VND then tabu search, restarted from the tabu search's
// last solution, until lambda_max consecutive rounds fail to improve the
// phase best (or the deadline passes). Returns the phase best.
Solution explore(Solution start, const SearchParams& params,
                 FrequencyVector& freq, Rng& rng, Deadline deadline);

// The `count` least-moved selected items; equal counts are ordered uniformly
// at random.
std::vector<int> least_moved_items(const Solution& sol,
                                   const FrequencyVector& freq, int count,
                                   Rng& rng);

// Perturbation: drop the max(1, floor(eta * |selection|)) least-moved items,
// then add items drawn uniformly from the unselected pool while anything
// still fits. The result is always capacity-feasible.
Solution escape(const Solution& best, double eta, const FrequencyVector& freq,
                Rng& rng);

// Full run: greedy start, then explore/escape rounds until the time budget
// is exhausted. The frequency vector persists across the whole run.
RunResult run(const Instance& inst, const SearchParams& params);

}  // namespace sukp
