#include "sukp/bench.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>

namespace sukp {

BenchStats bench(const Instance& inst, const SearchParams& params, int repeats,
                 std::uint64_t base_seed, int jobs) {
  if (repeats < 1) {
    throw std::invalid_argument("bench: repeats must be >= 1");
  }
  params.validate();

  std::vector<std::optional<RunResult>> slots(repeats);
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
  for (int k = 0; k < repeats; ++k) {
    SearchParams per_run = params;
    per_run.seed = base_seed + static_cast<std::uint64_t>(k);
    slots[k] = run(inst, per_run);
  }

  BenchStats stats;
  stats.runs = repeats;
  stats.per_run.reserve(repeats);
  for (auto& slot : slots) stats.per_run.push_back(std::move(*slot));

  double profit_sum = 0.0;
  double time_sum = 0.0;
  stats.f_best = 0;
  for (const RunResult& r : stats.per_run) {
    if (r.infeasible) ++stats.infeasible_runs;
    stats.f_best = std::max(stats.f_best, r.best_profit);
    profit_sum += static_cast<double>(r.best_profit);
    time_sum += r.time_to_best;
  }
  stats.f_avg = profit_sum / repeats;
  stats.t_avg = time_sum / repeats;
  double sq_sum = 0.0;
  for (const RunResult& r : stats.per_run) {
    const double d = static_cast<double>(r.best_profit) - stats.f_avg;
    sq_sum += d * d;
  }
  stats.std_dev = std::sqrt(sq_sum / repeats);  // population deviation
  return stats;
}

std::string format_table(
    const std::vector<std::pair<std::string, BenchStats>>& rows,
    TableFormat format) {
  std::string out;
  char buf[256];
  if (format == TableFormat::csv) {
    out += "instance,f_best,f_avg,std,t_avg\n";
    for (const auto& [name, st] : rows) {
      std::snprintf(buf, sizeof(buf), "%s,%lld,%.2f,%.2f,%.3f\n", name.c_str(),
                    static_cast<long long>(st.f_best), st.f_avg, st.std_dev,
                    st.t_avg);
      out += buf;
    }
  } else {
    out += "| instance | f_best | f_avg | std | t_avg |\n";
    out += "| --- | --- | --- | --- | --- |\n";
    for (const auto& [name, st] : rows) {
      std::snprintf(buf, sizeof(buf), "| %s | %lld | %.2f | %.2f | %.3f |\n",
                    name.c_str(), static_cast<long long>(st.f_best), st.f_avg,
                    st.std_dev, st.t_avg);
      out += buf;
    }
  }
  return out;
}

}  // namespace sukp
