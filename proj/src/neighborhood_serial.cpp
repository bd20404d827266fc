#include <limits>

#include "sukp/neighborhood.hpp"

// Serial reference implementations of the neighborhood kernels. The OpenMP
// variants in neighborhood_omp.cpp must stay candidate-for-candidate
// equivalent to these; the canonical scan order is:
//   N1: add moves over A-bar ascending, then exchanges (u in A asc, v in
//       A-bar asc);
//   N2: shapes (2,1), (1,2), (2,2), each with drop pairs and add pairs in
//       lexicographic ascending order;
//   N3: adds, then drops, then exchanges.

namespace sukp::detail {

namespace {

inline std::span<const std::int32_t> one(const std::int32_t& v) {
  return {&v, 1};
}

inline std::span<const std::int32_t> two(const std::int32_t* v) {
  return {v, 2};
}

}  // namespace

std::vector<Move> enumerate_n1_serial(const Solution& sol,
                                      std::int64_t best_profit) {
  const Instance& inst = sol.instance();
  const std::int64_t cap = inst.capacity();
  const std::int64_t base = sol.profit();
  const auto sel = sol.selected();
  const auto unsel = sol.unselected();

  std::vector<Move> out;
  for (const std::int32_t v : unsel) {
    const std::int64_t delta = inst.profit(v);
    if (base + delta <= best_profit) continue;
    if (weight_after_move(sol, {}, one(v)) > cap) continue;
    out.push_back(Move{{}, {v}, delta});
  }
  for (const std::int32_t u : sel) {
    for (const std::int32_t v : unsel) {
      const std::int64_t delta = inst.profit(v) - inst.profit(u);
      if (base + delta <= best_profit) continue;
      if (weight_after_move(sol, one(u), one(v)) > cap) continue;
      out.push_back(Move{{u}, {v}, delta});
    }
  }
  return out;
}

std::vector<Move> enumerate_n2_sampled_serial(const Solution& sol,
                                              std::int64_t best_profit,
                                              double rho, Rng& rng) {
  std::vector<Move> out;
  if (rho <= 0.0) return out;

  const Instance& inst = sol.instance();
  const std::int64_t cap = inst.capacity();
  const std::int64_t base = sol.profit();
  const auto sel = sol.selected();
  const auto unsel = sol.unselected();
  const int ns = static_cast<int>(sel.size());
  const int nu = static_cast<int>(unsel.size());

  // (2,1): drop two, add one.
  for (int a = 0; a < ns; ++a) {
    for (int b = a + 1; b < ns; ++b) {
      const std::int32_t dropped[2] = {sel[a], sel[b]};
      const std::int64_t drop_p =
          inst.profit(sel[a]) + inst.profit(sel[b]);
      for (int v = 0; v < nu; ++v) {
        if (random_unit(rng) >= rho) continue;
        const std::int64_t delta = inst.profit(unsel[v]) - drop_p;
        if (base + delta <= best_profit) continue;
        if (weight_after_move(sol, two(dropped), one(unsel[v])) > cap)
          continue;
        out.push_back(Move{{sel[a], sel[b]}, {unsel[v]}, delta});
      }
    }
  }
  // (1,2): drop one, add two.
  for (int u = 0; u < ns; ++u) {
    const std::int64_t drop_p = inst.profit(sel[u]);
    for (int v = 0; v < nu; ++v) {
      for (int w = v + 1; w < nu; ++w) {
        if (random_unit(rng) >= rho) continue;
        const std::int32_t added[2] = {unsel[v], unsel[w]};
        const std::int64_t delta =
            inst.profit(unsel[v]) + inst.profit(unsel[w]) - drop_p;
        if (base + delta <= best_profit) continue;
        if (weight_after_move(sol, one(sel[u]), two(added)) > cap) continue;
        out.push_back(Move{{sel[u]}, {unsel[v], unsel[w]}, delta});
      }
    }
  }
  // (2,2): drop two, add two.
  for (int a = 0; a < ns; ++a) {
    for (int b = a + 1; b < ns; ++b) {
      const std::int32_t dropped[2] = {sel[a], sel[b]};
      const std::int64_t drop_p =
          inst.profit(sel[a]) + inst.profit(sel[b]);
      for (int v = 0; v < nu; ++v) {
        for (int w = v + 1; w < nu; ++w) {
          if (random_unit(rng) >= rho) continue;
          const std::int32_t added[2] = {unsel[v], unsel[w]};
          const std::int64_t delta =
              inst.profit(unsel[v]) + inst.profit(unsel[w]) - drop_p;
          if (base + delta <= best_profit) continue;
          if (weight_after_move(sol, two(dropped), two(added)) > cap)
            continue;
          out.push_back(
              Move{{sel[a], sel[b]}, {unsel[v], unsel[w]}, delta});
        }
      }
    }
  }
  return out;
}

std::optional<N3Choice> best_n3_move_serial(const Solution& sol,
                                            const TabuState& tabu,
                                            std::int64_t best_profit,
                                            bool allow_aspiration, Rng& rng) {
  const Instance& inst = sol.instance();
  const std::int64_t cap = inst.capacity();
  const std::int64_t base = sol.profit();
  const auto sel = sol.selected();
  const auto unsel = sol.unselected();

  std::int64_t best_delta = std::numeric_limits<std::int64_t>::min();
  std::vector<N3Choice> ties;
  const auto offer = [&](Move mv, bool asp) {
    if (mv.profit_delta > best_delta) {
      best_delta = mv.profit_delta;
      ties.clear();
    }
    ties.push_back(N3Choice{std::move(mv), asp});
  };
  // Admissible: every item free of tabu, or the result beats best_profit.
  const auto admissible = [&](std::span<const std::int32_t> items,
                              std::int64_t delta, bool& asp) {
    asp = false;
    for (const std::int32_t i : items) {
      if (tabu.is_tabu(i)) {
        asp = true;
        break;
      }
    }
    if (!asp) return true;
    return allow_aspiration && base + delta > best_profit;
  };

  bool asp = false;
  for (const std::int32_t v : unsel) {
    const std::int64_t delta = inst.profit(v);
    if (delta < best_delta) continue;  // cannot reach the tie set
    if (!admissible(one(v), delta, asp)) continue;
    if (weight_after_move(sol, {}, one(v)) > cap) continue;
    offer(Move{{}, {v}, delta}, asp);
  }
  for (const std::int32_t u : sel) {
    const std::int64_t delta = -inst.profit(u);
    if (delta < best_delta) continue;
    if (!admissible(one(u), delta, asp)) continue;
    // Dropping only ever lowers the weight; always feasible.
    offer(Move{{u}, {}, delta}, asp);
  }
  for (const std::int32_t u : sel) {
    for (const std::int32_t v : unsel) {
      const std::int64_t delta = inst.profit(v) - inst.profit(u);
      if (delta < best_delta) continue;
      const std::int32_t pair[2] = {u, v};
      if (!admissible(two(pair), delta, asp)) continue;
      if (weight_after_move(sol, one(u), one(v)) > cap) continue;
      offer(Move{{u}, {v}, delta}, asp);
    }
  }

  if (ties.empty()) return std::nullopt;
  return std::move(ties[random_below(rng, ties.size())]);
}

}  // namespace sukp::detail
