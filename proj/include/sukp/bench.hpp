#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sukp/search.hpp"

namespace sukp {

struct BenchStats {
  std::int64_t f_best = 0;  // best profit over all runs
  double f_avg = 0.0;       // mean profit
  double std_dev = 0.0;     // population standard deviation of the profits
  double t_avg = 0.0;       // mean time-to-best, seconds
  int runs = 0;
  int infeasible_runs = 0;
  std::vector<RunResult> per_run;  // indexed by seed offset
};

// `repeats` independent runs seeded base_seed, base_seed + 1, ... sharing
// only the instance. jobs > 1 executes them concurrently; the statistics are
// aggregated in seed order either way.
BenchStats bench(const Instance& inst, const SearchParams& params, int repeats,
                 std::uint64_t base_seed, int jobs = 1);

enum class TableFormat { csv, markdown };

// Columns: instance, f_best, f_avg, std, t_avg. Averages carry two decimals,
// times three; CSV uses '.' as the decimal point.
std::string format_table(
    const std::vector<std::pair<std::string, BenchStats>>& rows,
    TableFormat format);

}  // namespace sukp
