#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "oracles.hpp"
#include "sukp/neighborhood.hpp"

using oracle::ItemSet;
using sukp::Instance;
using sukp::Move;
using sukp::Rng;
using sukp::Solution;
using sukp::TabuState;

namespace {

ItemSet result_set(const Solution& sol, const Move& mv) {
  ItemSet out = oracle::as_set(sol);
  for (const std::int32_t i : mv.drop) out.erase(i);
  for (const std::int32_t i : mv.add) out.insert(i);
  return out;
}

std::set<ItemSet> result_sets(const Solution& sol,
                              const std::vector<Move>& moves) {
  std::set<ItemSet> out;
  for (const Move& mv : moves) out.insert(result_set(sol, mv));
  return out;
}

}  // namespace

TEST_CASE("apply_move and its inverse cancel") {
  const Instance inst = Instance::generate(12, 12, 0.2, 0.9, 4);
  Rng rng(5);
  Solution sol = oracle::random_feasible_solution(inst, rng);
  const Solution snapshot = sol;
  const auto sel = sol.selected();
  const auto unsel = sol.unselected();
  REQUIRE(!sel.empty());
  REQUIRE(!unsel.empty());
  const Move mv{{sel[0]},
                {unsel[0]},
                inst.profit(unsel[0]) - inst.profit(sel[0])};
  sukp::apply_move(sol, mv);
  CHECK(sol.profit() == snapshot.profit() + mv.profit_delta);
  sukp::apply_move(sol, sukp::inverse_move(mv));
  CHECK(sol == snapshot);
}

TEST_CASE("apply_move validates the move against the solution") {
  const Instance inst = Instance::generate(8, 8, 0.3, 0.9, 4);
  Solution sol(inst);
  sol.add(0);
  CHECK_THROWS_AS(sukp::apply_move(sol, Move{{1}, {}, -inst.profit(1)}),
                  std::logic_error);
  CHECK_THROWS_AS(sukp::apply_move(sol, Move{{}, {0}, inst.profit(0)}),
                  std::logic_error);
  // drop/add overlap: item 0 appears on both sides
  CHECK_THROWS_AS(sukp::apply_move(sol, Move{{0}, {0}, 0}), std::logic_error);
  CHECK_THROWS_AS(sukp::apply_move(sol, Move{{0}, {}, 12345}),
                  std::logic_error);
}

TEST_CASE("an add move raises the profit by the item profit") {
  const Instance inst = Instance::generate(10, 10, 0.2, 0.9, 6);
  Solution sol(inst);
  const Move mv{{}, {3}, inst.profit(3)};
  sukp::apply_move(sol, mv);
  CHECK(sol.profit() == inst.profit(3));
}

TEST_CASE("emitted moves are always capacity-feasible when applied") {
  Rng rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    const Instance inst = Instance::generate(12, 11, 0.15, 0.8, 50 + trial);
    Solution sol = oracle::random_feasible_solution(inst, rng);
    const std::int64_t best = sol.profit();

    for (const Move& mv : sukp::enumerate_n1(sol, best)) {
      Solution s = sol;
      sukp::apply_move(s, mv);
      CHECK(s.weight() <= inst.capacity());
      CHECK(s.weight() == s.recompute_weight());
      CHECK(s.profit() > best);
    }
    auto n2 = sukp::enumerate_n2_sampled(sol, best, 1.0, rng);
    for (const Move& mv : n2) {
      Solution s = sol;
      sukp::apply_move(s, mv);
      CHECK(s.weight() <= inst.capacity());
      CHECK(s.weight() == s.recompute_weight());
      CHECK(s.profit() > best);
    }
    TabuState tabu(inst.num_items());
    const auto choice =
        sukp::best_n3_move(sol, tabu, best, true, rng);
    if (choice) {
      Solution s = sol;
      sukp::apply_move(s, choice->move);
      CHECK(s.weight() <= inst.capacity());
      CHECK(s.weight() == s.recompute_weight());
    }
  }
}

TEST_CASE("enumerate_n1 matches the exhaustive generator") {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = Instance::generate(12, 10, 0.15, 0.8, 400 + trial);
    const Solution sol = oracle::random_feasible_solution(inst, rng);
    const ItemSet sel = oracle::as_set(sol);
    for (const std::int64_t best :
         {sol.profit(), sol.profit() - 50, std::int64_t{0}}) {
      const auto got = result_sets(sol, sukp::enumerate_n1(sol, best));
      const auto want = oracle::n1_neighbors(inst, sel, best);
      CHECK(got == want);
    }
  }
}

TEST_CASE("enumerate_n1 with an unreachable bound is empty") {
  const Instance inst = Instance::generate(10, 10, 0.2, 0.9, 12);
  Rng rng(3);
  const Solution sol = oracle::random_feasible_solution(inst, rng);
  CHECK(sukp::enumerate_n1(sol, std::numeric_limits<std::int64_t>::max())
            .empty());
}

TEST_CASE("enumerate_n1 with everything selected is empty") {
  // capacity equal to the total weight lets every item in
  const char* text = "2 2 6\n3 4\n2 4\n1 0\n0 1\n";
  const Instance inst = Instance::parse(text);
  Solution sol(inst);
  sol.add(0);
  sol.add(1);
  CHECK(sukp::enumerate_n1(sol, 0).empty());
}

TEST_CASE("enumerate_n2_sampled at rho=1 matches the exhaustive generator") {
  Rng rng(32);
  for (int trial = 0; trial < 6; ++trial) {
    const Instance inst = Instance::generate(10, 10, 0.2, 0.8, 500 + trial);
    const Solution sol = oracle::random_feasible_solution(inst, rng);
    const ItemSet sel = oracle::as_set(sol);
    for (const std::int64_t best : {sol.profit(), std::int64_t{0}}) {
      auto list = sukp::enumerate_n2_sampled(sol, best, 1.0, rng);
      const auto got = result_sets(sol, list);
      const auto want = oracle::n2_neighbors(inst, sel, best);
      CHECK(got == want);
    }
  }
}

TEST_CASE("enumerate_n2_sampled at rho=0 is empty and draws nothing") {
  const Instance inst = Instance::generate(10, 10, 0.2, 0.8, 9);
  Rng rng(4);
  const Solution sol = oracle::random_feasible_solution(inst, rng);
  Rng before = rng;
  CHECK(sukp::enumerate_n2_sampled(sol, sol.profit(), 0.0, rng).empty());
  CHECK(rng == before);
}

TEST_CASE("enumerate_n2_sampled is reproducible for a fixed seed") {
  const Instance inst = Instance::generate(14, 12, 0.2, 0.8, 21);
  Rng setup(8);
  const Solution sol = oracle::random_feasible_solution(inst, setup);
  Rng r1(99), r2(99);
  const auto a = sukp::enumerate_n2_sampled(sol, 0, 0.05, r1);
  const auto b = sukp::enumerate_n2_sampled(sol, 0, 0.05, r2);
  CHECK(a == b);
  CHECK(r1 == r2);
}

TEST_CASE("best_n3_move matches the exhaustive argmax without tabu") {
  Rng rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = Instance::generate(11, 10, 0.2, 0.8, 600 + trial);
    const Solution sol = oracle::random_feasible_solution(inst, rng);
    TabuState tabu(inst.num_items());
    const auto choice = sukp::best_n3_move(sol, tabu, sol.profit(), true, rng);
    const auto want = oracle::n3_best(inst, oracle::as_set(sol));
    REQUIRE(choice.has_value() == want.any);
    if (choice) {
      CHECK(choice->move.profit_delta == want.best_delta);
      CHECK(want.argmax_results.count(result_set(sol, choice->move)) == 1);
      CHECK(!choice->aspiration);
    }
  }
}

TEST_CASE("best_n3_move under full tabu") {
  const Instance inst = Instance::generate(10, 10, 0.2, 0.8, 14);
  Rng rng(6);
  Solution sol = oracle::random_feasible_solution(inst, rng);
  while (sol.empty()) sol = oracle::random_feasible_solution(inst, rng);
  TabuState tabu(inst.num_items());
  tabu.iteration = 0;
  for (auto& e : tabu.expiry) e = 100;  // everything tabu

  SUBCASE("aspiration disabled yields no move") {
    CHECK(!sukp::best_n3_move(sol, tabu, sol.profit(), false, rng));
  }
  SUBCASE("aspiration admits only strict improvements over best") {
    const auto choice = sukp::best_n3_move(sol, tabu, sol.profit(), true, rng);
    if (choice) {
      CHECK(choice->aspiration);
      CHECK(sol.profit() + choice->move.profit_delta > sol.profit());
    }
  }
}

TEST_CASE("a lone selected item can always be dropped") {
  const Instance inst = Instance::generate(6, 6, 0.3, 0.5, 18);
  Solution sol(inst);
  // pick some item that fits alone, if any
  int fitting = -1;
  for (int i = 0; i < inst.num_items(); ++i) {
    if (inst.item_weight(i) <= inst.capacity()) {
      fitting = i;
      break;
    }
  }
  REQUIRE(fitting >= 0);
  sol.add(fitting);
  TabuState tabu(inst.num_items());
  for (int i = 0; i < inst.num_items(); ++i) {
    if (i != fitting) tabu.expiry[i] = 1000;  // everyone else tabu
  }
  Rng rng(7);
  // aspiration off: adds and exchanges are all tabu, but the bare drop of
  // the sole non-tabu item stays admissible
  const auto choice = sukp::best_n3_move(sol, tabu, sol.profit(), false, rng);
  REQUIRE(choice.has_value());
  CHECK(choice->move.add.empty());
  CHECK(choice->move.drop == std::vector<std::int32_t>{fitting});
}

TEST_CASE("serial and OpenMP kernels return identical results") {
  Rng rng(55);
  for (int trial = 0; trial < 6; ++trial) {
    const Instance inst = Instance::generate(16, 14, 0.15, 0.8, 700 + trial);
    const Solution sol = oracle::random_feasible_solution(inst, rng);
    const std::int64_t best = sol.profit() - 10;

    CHECK(sukp::enumerate_n1(sol, best, 1) == sukp::enumerate_n1(sol, best, 4));

    Rng r1(trial), r2(trial);
    CHECK(sukp::enumerate_n2_sampled(sol, best, 0.3, r1, 1) ==
          sukp::enumerate_n2_sampled(sol, best, 0.3, r2, 4));
    CHECK(r1 == r2);

    TabuState tabu(inst.num_items());
    // a mixed tabu state
    tabu.iteration = 5;
    for (int i = 0; i < inst.num_items(); i += 3) tabu.expiry[i] = 9;
    Rng r3(trial), r4(trial);
    const auto a = sukp::best_n3_move(sol, tabu, best, true, r3, 1);
    const auto b = sukp::best_n3_move(sol, tabu, best, true, r4, 4);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
      CHECK(a->move == b->move);
      CHECK(a->aspiration == b->aspiration);
    }
    CHECK(r3 == r4);
  }
}
