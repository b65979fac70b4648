// anysort: run anytime-sorting experiments and inspect individual runs.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "anysort/bench.hpp"
#include "anysort/metrics.hpp"
#include "anysort/random.hpp"
#include "anysort/sorters.hpp"

namespace {

struct BenchFlags {
  std::string config_path;
  std::optional<std::string> mode;
  std::optional<std::string> sizes;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> algos;
  std::optional<std::string> levels;
  std::optional<std::size_t> threads;
  std::optional<std::size_t> horizon;
  std::optional<std::string> out;
  std::optional<std::string> plot;
};

anysort::ExperimentConfig build_config(const BenchFlags& f) {
  using anysort::ExperimentMode;
  // The mode picks the defaults, so resolve it first: flag, then config file.
  anysort::ExperimentConfig probe;
  if (!f.config_path.empty()) anysort::apply_config_file(f.config_path, probe);
  ExperimentMode mode = f.mode ? anysort::parse_mode(*f.mode) : probe.mode;

  anysort::ExperimentConfig cfg = anysort::default_config(mode);
  if (!f.config_path.empty()) anysort::apply_config_file(f.config_path, cfg);
  cfg.mode = mode;
  if (f.sizes) cfg.sizes = anysort::parse_size_list(*f.sizes);
  if (f.trials) cfg.trials = *f.trials;
  if (f.seed) cfg.seed = *f.seed;
  if (f.algos) cfg.algorithms = anysort::parse_spec_list(*f.algos);
  if (f.levels) cfg.levels = anysort::parse_level_list(*f.levels);
  if (f.threads) cfg.threads = *f.threads;
  if (f.horizon) cfg.horizon = *f.horizon;
  if (f.out) cfg.csv_path = *f.out;
  if (f.plot) cfg.plot_path = *f.plot;
  anysort::validate(cfg);
  if (cfg.csv_path.empty() && cfg.plot_path.empty()) {
    throw std::invalid_argument("nothing to write: give --out and/or --plot");
  }
  return cfg;
}

int run_bench(const BenchFlags& flags) {
  const anysort::ExperimentConfig cfg = build_config(flags);
  const auto rows = anysort::run_experiment(cfg);
  if (!cfg.csv_path.empty()) anysort::emit_csv(rows, cfg.csv_path);
  if (!cfg.plot_path.empty()) anysort::emit_plot(rows, cfg.plot_path);
  std::fprintf(stderr, "anysort: %zu rows (%s mode, %zu trials)\n", rows.size(),
               std::string(anysort::to_string(cfg.mode)).c_str(), cfg.trials);
  return 0;
}

void print_list(const std::vector<std::size_t>& v) {
  std::printf("[");
  for (std::size_t i = 0; i < v.size(); ++i) std::printf(i ? " %zu" : "%zu", v[i]);
  std::printf("]");
}

int run_trace(const std::string& spec_text, std::size_t n, std::uint64_t seed, std::uint64_t trial) {
  const anysort::SorterSpec spec = anysort::parse_sorter_spec(spec_text);
  const anysort::HiddenList input = anysort::generate_permutation(seed, trial, n);
  anysort::AnytimeSorter sorter(spec, input, {.track_estimates = true, .track_tau = true});
  std::printf("input ");
  print_list(std::vector<std::size_t>(input.begin(), input.end()));
  std::printf("\n");
  while (!sorter.done()) {
    const anysort::Comparison c = sorter.step();
    const std::uint64_t tau = sorter.tau();
    std::printf("k=%zu compare %zu %c %zu  tau=%llu  estimate ", sorter.comparisons(), c.first,
                c.first_smaller ? '<' : '>', c.second, static_cast<unsigned long long>(tau));
    print_list(sorter.estimate());
    std::printf("\n");
  }
  std::printf("done after %zu comparisons", sorter.comparisons());
  if (n >= 2) std::printf(" (%.3f%% over the lower bound)", anysort::relative_overhead(sorter.comparisons(), n));
  std::printf("\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anytime sorting benchmarks"};
  app.require_subcommand(1);

  BenchFlags flags;
  auto* bench = app.add_subcommand("bench", "Run a termination or profile experiment");
  bench->add_option("--config", flags.config_path, "key=value file; flags override it");
  bench->add_option("--mode", flags.mode, "termination or profile");
  bench->add_option("--sizes", flags.sizes, "comma-separated list sizes, e.g. 8,16,32");
  bench->add_option("--trials", flags.trials, "random permutations per size (default 10000)");
  bench->add_option("--seed", flags.seed, "64-bit seed (default 0)");
  bench->add_option("--algos", flags.algos, "comma-separated algorithm:estimator list");
  bench->add_option("--levels", flags.levels, "quantile levels as fractions");
  bench->add_option("--threads", flags.threads, "worker threads (0 = all cores)");
  bench->add_option("--horizon", flags.horizon, "profile mode: minimum number of steps");
  bench->add_option("--out", flags.out, "CSV output path");
  bench->add_option("--plot", flags.plot, "SVG output path");

  std::string plot_in;
  std::string plot_out;
  auto* plot = app.add_subcommand("plot", "Render an SVG from a results CSV");
  plot->add_option("--in", plot_in, "results CSV")->required();
  plot->add_option("--out", plot_out, "SVG output path")->required();

  std::string trace_spec = "corsort:rho";
  std::size_t trace_n = 8;
  std::uint64_t trace_seed = 0;
  std::uint64_t trace_trial = 0;
  auto* trace = app.add_subcommand("trace", "Print every comparison and estimate of one run");
  trace->add_option("--algo", trace_spec, "algorithm:estimator");
  trace->add_option("--n", trace_n, "list size")->check(CLI::PositiveNumber);
  trace->add_option("--seed", trace_seed, "permutation seed");
  trace->add_option("--trial", trace_trial, "permutation trial index");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bench) return run_bench(flags);
    if (*plot) {
      anysort::emit_plot(anysort::load_csv(plot_in), plot_out);
      return 0;
    }
    if (*trace) return run_trace(trace_spec, trace_n, trace_seed, trace_trial);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "anysort: error: %s\n", e.what());
    return 1;
  }
  return 0;
}
