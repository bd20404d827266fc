#include <limits>

#include "sukp/neighborhood.hpp"

// OpenMP variants of the neighborhood kernels. Shared structure: a serial
// gate pass walks the canonical candidate order and applies the cheap checks
// (profit filter, sampling draws, tabu state) so all rng consumption stays
// sequential; the surviving candidates then get their union weights
// evaluated in parallel; a final serial pass assembles the results in the
// original order. This keeps the output bit-identical to the serial
// reference for every thread count.

namespace sukp::detail {

namespace {

// A candidate with at most two drops and two adds; -1 marks unused slots.
struct Cand {
  std::int32_t d0 = -1, d1 = -1, a0 = -1, a1 = -1;
  std::int64_t delta = 0;
  std::uint8_t aspiration = 0;
};

struct CandView {
  std::int32_t drop[2];
  std::int32_t add[2];
  int num_drop = 0;
  int num_add = 0;
};

inline CandView view_of(const Cand& c) {
  CandView v;
  if (c.d0 >= 0) v.drop[v.num_drop++] = c.d0;
  if (c.d1 >= 0) v.drop[v.num_drop++] = c.d1;
  if (c.a0 >= 0) v.add[v.num_add++] = c.a0;
  if (c.a1 >= 0) v.add[v.num_add++] = c.a1;
  return v;
}

inline Move to_move(const Cand& c) {
  Move mv;
  if (c.d0 >= 0) mv.drop.push_back(c.d0);
  if (c.d1 >= 0) mv.drop.push_back(c.d1);
  if (c.a0 >= 0) mv.add.push_back(c.a0);
  if (c.a1 >= 0) mv.add.push_back(c.a1);
  mv.profit_delta = c.delta;
  return mv;
}

// Capacity feasibility of every candidate, evaluated in parallel.
std::vector<std::uint8_t> feasible_flags(const Solution& sol,
                                         const std::vector<Cand>& cands,
                                         int threads) {
  const std::int64_t cap = sol.instance().capacity();
  std::vector<std::uint8_t> keep(cands.size(), 0);
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t idx = 0;
       idx < static_cast<std::int64_t>(cands.size()); ++idx) {
    const CandView v = view_of(cands[idx]);
    if (v.num_add == 0) {
      keep[idx] = 1;  // pure drops only shed weight
      continue;
    }
    keep[idx] =
        weight_after_move(sol, {v.drop, static_cast<std::size_t>(v.num_drop)},
                          {v.add, static_cast<std::size_t>(v.num_add)}) <= cap;
  }
  return keep;
}

}  // namespace

std::vector<Move> enumerate_n1_omp(const Solution& sol,
                                   std::int64_t best_profit, int threads) {
  const Instance& inst = sol.instance();
  const std::int64_t base = sol.profit();
  const auto sel = sol.selected();
  const auto unsel = sol.unselected();

  std::vector<Cand> cands;
  for (const std::int32_t v : unsel) {
    const std::int64_t delta = inst.profit(v);
    if (base + delta > best_profit) {
      cands.push_back(Cand{-1, -1, v, -1, delta});
    }
  }
  for (const std::int32_t u : sel) {
    for (const std::int32_t v : unsel) {
      const std::int64_t delta = inst.profit(v) - inst.profit(u);
      if (base + delta > best_profit) {
        cands.push_back(Cand{u, -1, v, -1, delta});
      }
    }
  }

  const auto keep = feasible_flags(sol, cands, threads);
  std::vector<Move> out;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (keep[i]) out.push_back(to_move(cands[i]));
  }
  return out;
}

std::vector<Move> enumerate_n2_sampled_omp(const Solution& sol,
                                           std::int64_t best_profit,
                                           double rho, Rng& rng,
                                           int threads) {
  std::vector<Move> out;
  if (rho <= 0.0) return out;

  const Instance& inst = sol.instance();
  const std::int64_t base = sol.profit();
  const auto sel = sol.selected();
  const auto unsel = sol.unselected();
  const int ns = static_cast<int>(sel.size());
  const int nu = static_cast<int>(unsel.size());

  std::vector<Cand> cands;
  // (2,1)
  for (int a = 0; a < ns; ++a) {
    for (int b = a + 1; b < ns; ++b) {
      const std::int64_t drop_p = inst.profit(sel[a]) + inst.profit(sel[b]);
      for (int v = 0; v < nu; ++v) {
        if (random_unit(rng) >= rho) continue;
        const std::int64_t delta = inst.profit(unsel[v]) - drop_p;
        if (base + delta <= best_profit) continue;
        cands.push_back(Cand{sel[a], sel[b], unsel[v], -1, delta});
      }
    }
  }
  // (1,2)
  for (int u = 0; u < ns; ++u) {
    const std::int64_t drop_p = inst.profit(sel[u]);
    for (int v = 0; v < nu; ++v) {
      for (int w = v + 1; w < nu; ++w) {
        if (random_unit(rng) >= rho) continue;
        const std::int64_t delta =
            inst.profit(unsel[v]) + inst.profit(unsel[w]) - drop_p;
        if (base + delta <= best_profit) continue;
        cands.push_back(Cand{sel[u], -1, unsel[v], unsel[w], delta});
      }
    }
  }
  // (2,2)
  for (int a = 0; a < ns; ++a) {
    for (int b = a + 1; b < ns; ++b) {
      const std::int64_t drop_p = inst.profit(sel[a]) + inst.profit(sel[b]);
      for (int v = 0; v < nu; ++v) {
        for (int w = v + 1; w < nu; ++w) {
          if (random_unit(rng) >= rho) continue;
          const std::int64_t delta =
              inst.profit(unsel[v]) + inst.profit(unsel[w]) - drop_p;
          if (base + delta <= best_profit) continue;
          cands.push_back(Cand{sel[a], sel[b], unsel[v], unsel[w], delta});
        }
      }
    }
  }

  const auto keep = feasible_flags(sol, cands, threads);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (keep[i]) out.push_back(to_move(cands[i]));
  }
  return out;
}

std::optional<N3Choice> best_n3_move_omp(const Solution& sol,
                                         const TabuState& tabu,
                                         std::int64_t best_profit,
                                         bool allow_aspiration, Rng& rng,
                                         int threads) {
  const Instance& inst = sol.instance();
  const std::int64_t base = sol.profit();
  const auto sel = sol.selected();
  const auto unsel = sol.unselected();

  const auto admit = [&](std::int32_t i0, std::int32_t i1, std::int64_t delta,
                         std::uint8_t& asp) {
    asp = tabu.is_tabu(i0) || (i1 >= 0 && tabu.is_tabu(i1));
    if (!asp) return true;
    return allow_aspiration && base + delta > best_profit;
  };

  std::vector<Cand> cands;
  std::uint8_t asp = 0;
  for (const std::int32_t v : unsel) {
    const std::int64_t delta = inst.profit(v);
    if (admit(v, -1, delta, asp)) {
      cands.push_back(Cand{-1, -1, v, -1, delta, asp});
    }
  }
  for (const std::int32_t u : sel) {
    const std::int64_t delta = -inst.profit(u);
    if (admit(u, -1, delta, asp)) {
      cands.push_back(Cand{u, -1, -1, -1, delta, asp});
    }
  }
  for (const std::int32_t u : sel) {
    for (const std::int32_t v : unsel) {
      const std::int64_t delta = inst.profit(v) - inst.profit(u);
      if (admit(u, v, delta, asp)) {
        cands.push_back(Cand{u, -1, v, -1, delta, asp});
      }
    }
  }

  const auto keep = feasible_flags(sol, cands, threads);
  std::int64_t best_delta = std::numeric_limits<std::int64_t>::min();
  std::vector<std::size_t> ties;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!keep[i]) continue;
    if (cands[i].delta > best_delta) {
      best_delta = cands[i].delta;
      ties.clear();
    }
    if (cands[i].delta == best_delta) ties.push_back(i);
  }
  if (ties.empty()) return std::nullopt;
  const Cand& pick = cands[ties[random_below(rng, ties.size())]];
  return N3Choice{to_move(pick), pick.aspiration != 0};
}

}  // namespace sukp::detail
