#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sukp/solution.hpp"

using sukp::Instance;
using sukp::Solution;

TEST_CASE("empty solution") {
  const Instance inst = Instance::generate(10, 10, 0.2, 0.8, 1);
  const Solution sol(inst);
  CHECK(sol.profit() == 0);
  CHECK(sol.weight() == 0);
  CHECK(sol.empty());
  CHECK(sol.selected().empty());
  CHECK(sol.unselected().size() == 10);
}

TEST_CASE("shared elements are counted once") {
  // Items 0 and 1 both contain element 2 (weight 7).
  const char* text =
      "2 3 20\n"
      "5 6\n"
      "2 4 7\n"
      "1 0 1\n"
      "0 1 1\n";
  const Instance inst = Instance::parse(text);
  Solution sol(inst);
  sol.add(0);
  CHECK(sol.weight() == 2 + 7);
  sol.add(1);
  CHECK(sol.weight() == 2 + 4 + 7);  // 7 enters only once
  CHECK(sol.profit() == 11);
}

TEST_CASE("disjoint items add their full weights") {
  const char* text =
      "2 2 6\n"
      "3 4\n"
      "2 4\n"
      "1 0\n"
      "0 1\n";
  const Instance inst = Instance::parse(text);
  Solution sol(inst);
  sol.add(0);
  sol.add(1);
  CHECK(sol.weight() == inst.item_weight(0) + inst.item_weight(1));
}

TEST_CASE("add then remove restores the exact state") {
  const Instance inst = Instance::generate(12, 12, 0.2, 0.8, 3);
  const Solution empty(inst);
  Solution sol(inst);
  sol.add(4);
  sol.remove(4);
  CHECK(sol == empty);

  sol.add(1);
  sol.add(7);
  const Solution snapshot = sol;
  sol.add(3);
  sol.remove(3);
  CHECK(sol == snapshot);
}

TEST_CASE("add and remove reject wrong membership") {
  const Instance inst = Instance::generate(8, 8, 0.3, 0.8, 2);
  Solution sol(inst);
  CHECK_THROWS_AS(sol.remove(0), std::logic_error);
  sol.add(0);
  CHECK_THROWS_AS(sol.add(0), std::logic_error);
  CHECK_THROWS_AS(sol.add(99), std::out_of_range);
}

TEST_CASE("weight is monotone under add") {
  const Instance inst = Instance::generate(15, 14, 0.2, 0.9, 11);
  Solution sol(inst);
  std::int64_t prev = 0;
  for (int i = 0; i < inst.num_items(); ++i) {
    sol.add(i);
    CHECK(sol.weight() >= prev);
    prev = sol.weight();
  }
}

TEST_CASE("cached totals match recomputation under random add/remove") {
  sukp::Rng rng(123);
  for (int trial = 0; trial < 5; ++trial) {
    const Instance inst = Instance::generate(
        10 + static_cast<int>(sukp::random_below(rng, 10)),
        8 + static_cast<int>(sukp::random_below(rng, 10)), 0.2, 0.9,
        1000 + trial);
    Solution sol(inst);
    for (int step = 0; step < 1000; ++step) {
      const int i =
          static_cast<int>(sukp::random_below(rng, inst.num_items()));
      if (sol.contains(i)) {
        sol.remove(i);
      } else {
        sol.add(i);
      }
      if (step % 50 == 0) {
        CHECK(sol.weight() == sol.recompute_weight());
        CHECK(sol.profit() == sol.recompute_profit());
      }
    }
    CHECK(sol.weight() == sol.recompute_weight());
    CHECK(sol.profit() == sol.recompute_profit());
    // cross-check against the oracle route as well
    CHECK(sol.weight() == oracle::union_weight(inst, oracle::as_set(sol)));
  }
}

TEST_CASE("all items selected covers exactly the reachable elements") {
  const Instance inst = Instance::generate(9, 13, 0.15, 0.9, 6);
  Solution sol(inst);
  for (int i = 0; i < inst.num_items(); ++i) sol.add(i);
  std::int64_t expect = 0;
  for (int j = 0; j < inst.num_elements(); ++j) {
    bool covered = false;
    for (int i = 0; i < inst.num_items() && !covered; ++i) {
      covered = inst.contains(i, j);
    }
    if (covered) expect += inst.element_weight(j);
  }
  CHECK(sol.weight() == expect);
}

TEST_CASE("log line lists sorted items with totals") {
  const char* text =
      "3 2 6\n"
      "3 4 5\n"
      "2 4\n"
      "1 0\n"
      "0 1\n"
      "1 1\n";
  const Instance inst = Instance::parse(text);
  Solution sol(inst);
  sol.add(2);
  sol.add(0);
  CHECK(sol.log_line() == "profit=8 weight=6 items=[0 2]");
}
