#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sukp/bench.hpp"
#include "sukp/exact.hpp"
#include "sukp/lp_export.hpp"
#include "sukp/search.hpp"

// Exit codes: 0 success, 1 usage error, 2 malformed instance, 3 infeasible
// instance.
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitInfeasible = 3;

sukp::Instance load_or_exit(const std::string& path) {
  sukp::Instance inst = sukp::Instance::load(path);
  if (inst.capacity_exceeds_total_weight()) {
    std::cerr << "warning: capacity exceeds the total element weight; "
                 "every item set fits\n";
  }
  return inst;
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

int do_solve(const std::string& file, const sukp::SearchParams& params,
             const std::string& trace_file) {
  const sukp::Instance inst = load_or_exit(file);
  const sukp::RunResult result = sukp::run(inst, params);

  if (!trace_file.empty()) {
    std::ofstream trace(trace_file);
    if (!trace) {
      std::cerr << "error: cannot write trace file " << trace_file << "\n";
      return kExitUsage;
    }
    char line[64];
    for (const auto& [t, profit] : result.trace) {
      std::snprintf(line, sizeof(line), "%.6f %lld\n", t,
                    static_cast<long long>(profit));
      trace << line;
    }
  }

  if (result.infeasible) {
    std::cerr << "infeasible: no single item fits the capacity\n";
    std::cout << "best profit: 0\n";
    return kExitInfeasible;
  }

  std::printf("instance: %s (m=%d n=%d density=%.4f capacity_ratio=%.4f)\n",
              stem_of(file).c_str(), inst.num_items(), inst.num_elements(),
              inst.density(), inst.capacity_ratio());
  std::printf("best profit: %lld\n",
              static_cast<long long>(result.best_profit));
  std::printf("time to best: %.3f s  outer iterations: %lld\n",
              result.time_to_best,
              static_cast<long long>(result.outer_iterations));
  std::printf("solution: %s\n", result.best.log_line().c_str());
  return kExitOk;
}

int do_bench(const std::string& file, const sukp::SearchParams& params,
             int runs, std::uint64_t seed, const std::string& format,
             int jobs) {
  const sukp::Instance inst = load_or_exit(file);
  const sukp::BenchStats stats = sukp::bench(inst, params, runs, seed, jobs);
  if (stats.infeasible_runs > 0) {
    std::cerr << "warning: " << stats.infeasible_runs
              << " run(s) infeasible, counted as profit 0\n";
  }
  std::cout << sukp::format_table({{stem_of(file), stats}},
                                  format == "markdown"
                                      ? sukp::TableFormat::markdown
                                      : sukp::TableFormat::csv);
  return stats.infeasible_runs == stats.runs ? kExitInfeasible : kExitOk;
}

int do_gen(int items, int elements, double alpha, double beta,
           std::uint64_t seed, const std::string& out_file) {
  const sukp::Instance inst =
      sukp::Instance::generate(items, elements, alpha, beta, seed);
  std::ofstream out(out_file);
  if (!out) {
    std::cerr << "error: cannot write " << out_file << "\n";
    return kExitUsage;
  }
  inst.serialize(out);
  std::printf("wrote %s: m=%d n=%d density=%.4f capacity_ratio=%.4f C=%lld\n",
              out_file.c_str(), inst.num_items(), inst.num_elements(),
              inst.density(), inst.capacity_ratio(),
              static_cast<long long>(inst.capacity()));
  return kExitOk;
}

int do_exact(const std::string& file, int max_items) {
  const sukp::Instance inst = load_or_exit(file);
  const sukp::ExactResult result = sukp::brute_force(inst, max_items);
  std::printf("optimal profit: %lld\n",
              static_cast<long long>(result.optimal_profit));
  std::printf("optimal set:");
  for (const int i : result.optimal_set) std::printf(" %d", i);
  std::printf("\nsubsets enumerated: %llu\n",
              static_cast<unsigned long long>(result.subsets_enumerated));
  return kExitOk;
}

int do_export_lp(const std::string& file, const std::string& out_file) {
  const sukp::Instance inst = load_or_exit(file);
  std::ofstream out(out_file);
  if (!out) {
    std::cerr << "error: cannot write " << out_file << "\n";
    return kExitUsage;
  }
  sukp::export_lp(inst, out);
  std::printf("wrote %s\n", out_file.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set-union knapsack: iterated two-phase local search solver, "
               "instance generator, exact oracle and LP exporter"};
  app.require_subcommand(1);

  std::string file, out_file, trace_file, format = "csv";
  sukp::SearchParams params;
  int runs = 10, jobs = 1, gen_items = 0, gen_elements = 0, max_items = 25;
  double alpha = 0.1, beta = 0.75;
  std::uint64_t seed = 0;
  bool strict_paper = false;
  bool greedy_stop = false;

  auto* solve = app.add_subcommand("solve", "run the search on an instance");
  solve->add_option("file", file, "instance file")->required();
  solve->add_option("--seed", params.seed, "rng seed");
  solve->add_option("--time", params.time_budget, "time budget, seconds")
      ->check(CLI::PositiveNumber);
  solve->add_option("--lambda-max", params.lambda_max, "exploration depth")
      ->check(CLI::PositiveNumber);
  solve->add_option("--rho", params.rho, "N2 sampling probability")
      ->check(CLI::Range(0.0, 1.0));
  solve->add_option("--omega-max", params.omega_max, "tabu search depth")
      ->check(CLI::PositiveNumber);
  solve->add_option("--eta", params.eta, "perturbation strength")
      ->check(CLI::Range(0.0, 1.0));
  solve->add_option("--trace", trace_file,
                    "write improvement trace lines 'seconds profit'");
  solve->add_flag("--strict-paper", strict_paper,
                  "disable the aspiration override in tabu search");
  solve->add_flag("--greedy-stop-first", greedy_stop,
                  "stop the greedy scan at the first item that does not fit");
  solve->add_option("--threads", params.eval_threads,
                    "threads for neighborhood evaluation")
      ->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "repeated seeded runs and stats");
  bench->add_option("file", file, "instance file")->required();
  bench->add_option("--runs", runs, "number of runs")
      ->required()
      ->check(CLI::PositiveNumber);
  bench->add_option("--time", params.time_budget, "time budget per run")
      ->required()
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "base seed (run k uses seed+k)");
  bench->add_option("--format", format, "table format")
      ->check(CLI::IsMember({"csv", "markdown"}));
  bench->add_option("--jobs", jobs, "concurrent runs")
      ->check(CLI::PositiveNumber);
  bench->add_option("--lambda-max", params.lambda_max, "exploration depth")
      ->check(CLI::PositiveNumber);
  bench->add_option("--rho", params.rho, "N2 sampling probability")
      ->check(CLI::Range(0.0, 1.0));
  bench->add_option("--omega-max", params.omega_max, "tabu search depth")
      ->check(CLI::PositiveNumber);
  bench->add_option("--eta", params.eta, "perturbation strength")
      ->check(CLI::Range(0.0, 1.0));
  bench->add_flag("--strict-paper", strict_paper,
                  "disable the aspiration override in tabu search");

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--items", gen_items, "number of items")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--elements", gen_elements, "number of elements")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--alpha", alpha, "incidence density in (0,1)")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--beta", beta, "capacity ratio in (0,1)")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("-o,--output", out_file, "output file")->required();

  auto* exact = app.add_subcommand("exact", "brute-force optimum (small m)");
  exact->add_option("file", file, "instance file")->required();
  exact->add_option("--max-items", max_items, "item-count limit")
      ->check(CLI::Range(1, 30));

  auto* export_lp =
      app.add_subcommand("export-lp", "write the 0/1 model in LP format");
  export_lp->add_option("file", file, "instance file")->required();
  export_lp->add_option("-o,--output", out_file, "output .lp file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  params.aspiration = !strict_paper;
  params.greedy_stop_at_overflow = greedy_stop;

  try {
    if (solve->parsed()) return do_solve(file, params, trace_file);
    if (bench->parsed()) return do_bench(file, params, runs, seed, format, jobs);
    if (gen->parsed()) {
      return do_gen(gen_items, gen_elements, alpha, beta, seed, out_file);
    }
    if (exact->parsed()) return do_exact(file, max_items);
    if (export_lp->parsed()) return do_export_lp(file, out_file);
  } catch (const sukp::ParseError& e) {
    std::cerr << "malformed instance: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
