#include "sukp/search.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sukp {

namespace {

double elapsed_seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Highest profit delta in `moves`; equal-best entries are drawn uniformly.
const Move& pick_best(const std::vector<Move>& moves, Rng& rng) {
  std::int64_t best = moves.front().profit_delta;
  for (const Move& mv : moves) best = std::max(best, mv.profit_delta);
  std::vector<std::size_t> ties;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i].profit_delta == best) ties.push_back(i);
  }
  return moves[ties[random_below(rng, ties.size())]];
}

}  // namespace

void SearchParams::validate() const {
  if (lambda_max < 1) {
    throw std::invalid_argument("params: lambda_max must be >= 1");
  }
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::invalid_argument("params: rho must lie in [0, 1]");
  }
  if (omega_max < 1) {
    throw std::invalid_argument("params: omega_max must be >= 1");
  }
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("params: eta must lie in (0, 1]");
  }
  if (!(time_budget > 0.0)) {
    throw std::invalid_argument("params: time budget must be positive");
  }
  if (eval_threads < 1) {
    throw std::invalid_argument("params: eval_threads must be >= 1");
  }
}

void FrequencyVector::record(const Move& mv) {
  for (const std::int32_t i : mv.drop) ++counts[i];
  for (const std::int32_t i : mv.add) ++counts[i];
}

std::int64_t FrequencyVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

Solution greedy_initial_solution(const Instance& inst, bool stop_at_overflow) {
  const int m = inst.num_items();
  std::vector<std::int32_t> order(m);
  std::vector<double> ratio(m);
  for (int i = 0; i < m; ++i) {
    order[i] = i;
    ratio[i] = static_cast<double>(inst.profit(i)) /
               static_cast<double>(inst.item_weight(i));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::int32_t a, std::int32_t b) {
                     return ratio[a] > ratio[b];
                   });

  Solution sol(inst);
  for (const std::int32_t i : order) {
    if (weight_after_move(sol, {}, {&i, 1}) <= inst.capacity()) {
      sol.add(i);
    } else if (stop_at_overflow) {
      break;
    }
  }
  return sol;
}

std::int64_t tabu_tenure(const Solution& sol, int item) {
  const std::int64_t m = sol.instance().num_items();
  const std::int64_t in_count = sol.size();
  const std::int64_t tenure = sol.contains(item)
                                  ? (2 * in_count) / 5
                                  : (20 * (m - in_count)) / m;
  return std::max<std::int64_t>(1, tenure);
}

Solution vnd(Solution start, const SearchParams& params, FrequencyVector& freq,
             Rng& rng, Deadline deadline, MoveLog* log) {
  Solution sol = std::move(start);
  Solution best = sol;
  while (Clock::now() < deadline) {
    const auto n1 = enumerate_n1(sol, best.profit(), params.eval_threads);
    if (!n1.empty()) {
      const Move& mv = pick_best(n1, rng);
      apply_move(sol, mv);
      freq.record(mv);
      if (log) log->push_back(MoveLogEntry{mv, false});
      assert(sol.fits_capacity());
      best = sol;  // the filter guarantees strict improvement
      continue;
    }
    const auto n2 = enumerate_n2_sampled(sol, best.profit(), params.rho, rng,
                                         params.eval_threads);
    if (!n2.empty()) {
      const Move& mv = pick_best(n2, rng);
      apply_move(sol, mv);
      freq.record(mv);
      if (log) log->push_back(MoveLogEntry{mv, false});
      assert(sol.fits_capacity());
      best = sol;
      continue;
    }
    break;  // neither neighborhood improves on the descent best
  }
  return best;
}

TsResult tabu_search(Solution start, const SearchParams& params,
                     FrequencyVector& freq, Rng& rng, Deadline deadline,
                     MoveLog* log) {
  Solution sol = std::move(start);
  Solution best = sol;
  TabuState tabu(sol.instance().num_items());
  int non_improving = 0;
  while (non_improving < params.omega_max && Clock::now() < deadline) {
    const auto choice = best_n3_move(sol, tabu, best.profit(),
                                     params.aspiration, rng,
                                     params.eval_threads);
    if (!choice) break;  // nothing admissible, the iteration cannot proceed
    apply_move(sol, choice->move);
    freq.record(choice->move);
    if (log) log->push_back(MoveLogEntry{choice->move, choice->aspiration});
    // Moved items become tabu for a tenure measured on the post-move split.
    tabu.iteration += 1;
    for (const std::int32_t i : choice->move.drop) {
      tabu.expiry[i] = tabu.iteration + tabu_tenure(sol, i);
    }
    for (const std::int32_t i : choice->move.add) {
      tabu.expiry[i] = tabu.iteration + tabu_tenure(sol, i);
    }
    if (sol.profit() > best.profit()) {
      assert(sol.fits_capacity());
      best = sol;
      non_improving = 0;
    } else {
      ++non_improving;
    }
  }
  return TsResult{std::move(best), std::move(sol)};
}

Solution explore(Solution start, const SearchParams& params,
                 FrequencyVector& freq, Rng& rng, Deadline deadline) {
  Solution best = start;
  Solution sol = std::move(start);
  int non_improving = 0;
  while (non_improving < params.lambda_max && Clock::now() < deadline) {
    sol = vnd(std::move(sol), params, freq, rng, deadline);
    TsResult ts = tabu_search(std::move(sol), params, freq, rng, deadline);
    sol = std::move(ts.last);  // the next round restarts from TS's endpoint
    if (ts.best.profit() > best.profit()) {
      assert(ts.best.fits_capacity());
      best = std::move(ts.best);
      non_improving = 0;
    } else {
      ++non_improving;
    }
  }
  return best;
}

std::vector<int> least_moved_items(const Solution& sol,
                                   const FrequencyVector& freq, int count,
                                   Rng& rng) {
  const auto items = sol.selected();
  std::vector<std::uint64_t> key(items.size());
  for (auto& k : key) k = rng();  // randomizes the order of equal counts
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const std::int64_t ca = freq.counts[items[a]];
    const std::int64_t cb = freq.counts[items[b]];
    return ca != cb ? ca < cb : key[a] < key[b];
  });
  std::vector<int> out;
  const std::size_t take =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(count, 0)),
                            items.size());
  out.reserve(take);
  for (std::size_t k = 0; k < take; ++k) out.push_back(items[order[k]]);
  return out;
}

Solution escape(const Solution& best, double eta, const FrequencyVector& freq,
                Rng& rng) {
  Solution sol = best;
  if (!sol.empty()) {
    const int victims = std::max(
        1, static_cast<int>(std::floor(eta * static_cast<double>(sol.size()))));
    for (const int i : least_moved_items(sol, freq, victims, rng)) {
      sol.remove(i);
    }
  }
  // Random refill: items that fail to fit are discarded for good, since the
  // weight only grows from here.
  auto pool = sol.unselected();
  while (!pool.empty()) {
    const std::size_t k = random_below(rng, pool.size());
    const std::int32_t v = pool[k];
    pool[k] = pool.back();
    pool.pop_back();
    if (weight_after_move(sol, {}, {&v, 1}) <= sol.instance().capacity()) {
      sol.add(v);
    }
  }
  return sol;
}

RunResult run(const Instance& inst, const SearchParams& params) {
  params.validate();
  const auto start_time = Clock::now();
  const Deadline deadline =
      start_time + std::chrono::duration_cast<Clock::duration>(
                       std::chrono::duration<double>(params.time_budget));

  Rng rng(params.seed);
  FrequencyVector freq(inst.num_items());

  Solution initial =
      greedy_initial_solution(inst, params.greedy_stop_at_overflow);
  RunResult result{initial, 0, 0.0, 0, {}, false};
  if (initial.empty()) {
    result.infeasible = true;  // not even one item fits
    return result;
  }

  Solution best = initial;
  result.trace.emplace_back(elapsed_seconds(start_time), best.profit());
  result.time_to_best = result.trace.back().first;

  Solution current = std::move(initial);
  while (Clock::now() < deadline) {
    Solution phase_best =
        explore(std::move(current), params, freq, rng, deadline);
    ++result.outer_iterations;
    if (phase_best.profit() > best.profit()) {
      assert(phase_best.fits_capacity());
      best = phase_best;
      result.time_to_best = elapsed_seconds(start_time);
      result.trace.emplace_back(result.time_to_best, best.profit());
    }
    if (Clock::now() >= deadline) break;
    current = escape(phase_best, params.eta, freq, rng);
  }

  result.best = std::move(best);
  result.best_profit = result.best.profit();
  return result;
}

}  // namespace sukp
