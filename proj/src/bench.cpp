#include "anysort/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "anysort/metrics.hpp"
#include "anysort/random.hpp"

namespace anysort {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    const std::string_view part = trim(text.substr(start, end - start));
    if (!part.empty()) parts.push_back(part);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::size_t worker_count(std::size_t requested, std::size_t jobs) {
  std::size_t threads = requested;
  if (threads == 0) threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(threads, jobs));
}

// Runs fn(0..count-1) on a pool. Each index writes only its own result slot,
// so scheduling never affects the outcome. The first exception is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  const std::size_t workers = worker_count(threads, count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          const std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

void append_quantile_rows(std::vector<ResultRow>& rows, const SorterSpec& spec, std::size_t n,
                          std::optional<std::size_t> step, std::span<const double> sorted,
                          std::span<const double> levels) {
  for (const double level : levels) {
    rows.push_back(ResultRow{std::string(to_string(spec.algorithm)),
                             std::string(to_string(spec.estimator)), n, step, level,
                             quantile_sorted(sorted, level)});
  }
}

}  // namespace

std::string_view to_string(ExperimentMode mode) {
  return mode == ExperimentMode::termination ? "termination" : "profile";
}

ExperimentMode parse_mode(std::string_view text) {
  if (text == "termination") return ExperimentMode::termination;
  if (text == "profile") return ExperimentMode::profile;
  throw std::invalid_argument("unknown mode '" + std::string(text) +
                              "' (expected termination or profile)");
}

ExperimentConfig default_config(ExperimentMode mode) {
  ExperimentConfig cfg;
  cfg.mode = mode;
  cfg.levels = default_quantile_levels();
  if (mode == ExperimentMode::termination) {
    cfg.sizes = {8, 16, 32, 64, 128, 256, 512, 1024};
    cfg.algorithms = parse_spec_list(
        "heapsort:natural,quicksort:natural,corsort:rho,mergesort_dfs:natural,ford_johnson:rho");
  } else {
    cfg.sizes = {1000};
    cfg.algorithms = parse_spec_list(
        "quicksort:natural,asort:rho,corsort:rho,mergesort_dfs:natural,mergesort_bfs:rho,"
        "ford_johnson:rho");
  }
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (cfg.sizes.empty()) throw std::invalid_argument("no sizes given");
  for (const std::size_t n : cfg.sizes) {
    if (n < 2) throw std::invalid_argument("every size must be at least 2");
  }
  if (cfg.algorithms.empty()) throw std::invalid_argument("no algorithms given");
  std::set<std::string> seen;
  for (const SorterSpec& spec : cfg.algorithms) {
    validate(spec);
    if (!seen.insert(to_string(spec)).second) {
      throw std::invalid_argument("algorithm " + to_string(spec) + " listed twice");
    }
  }
  if (cfg.levels.empty()) throw std::invalid_argument("no quantile levels given");
  for (const double level : cfg.levels) {
    if (!(level >= 0.0 && level <= 1.0)) {
      throw std::invalid_argument("quantile levels must lie in [0, 1]");
    }
  }
  if (!std::is_sorted(cfg.levels.begin(), cfg.levels.end()) ||
      std::adjacent_find(cfg.levels.begin(), cfg.levels.end()) != cfg.levels.end()) {
    throw std::invalid_argument("quantile levels must be strictly increasing");
  }
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> sizes;
  for (const std::string_view part : split(text, ',')) {
    sizes.push_back(parse_number<std::size_t>(part, "size"));
  }
  return sizes;
}

std::vector<SorterSpec> parse_spec_list(std::string_view text) {
  std::vector<SorterSpec> specs;
  for (const std::string_view part : split(text, ',')) specs.push_back(parse_sorter_spec(part));
  return specs;
}

std::vector<double> parse_level_list(std::string_view text) {
  std::vector<double> levels;
  for (const std::string_view part : split(text, ',')) {
    levels.push_back(parse_number<double>(part, "quantile level"));
  }
  return levels;
}

void apply_config_value(std::string_view key, std::string_view value, ExperimentConfig& cfg) {
  if (key == "mode") {
    cfg.mode = parse_mode(value);
  } else if (key == "sizes") {
    cfg.sizes = parse_size_list(value);
  } else if (key == "trials") {
    cfg.trials = parse_number<std::size_t>(value, "trial count");
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(value, "seed");
  } else if (key == "algos") {
    cfg.algorithms = parse_spec_list(value);
  } else if (key == "levels") {
    cfg.levels = parse_level_list(value);
  } else if (key == "threads") {
    cfg.threads = parse_number<std::size_t>(value, "thread count");
  } else if (key == "horizon") {
    cfg.horizon = parse_number<std::size_t>(value, "horizon");
  } else if (key == "out") {
    cfg.csv_path = std::string(value);
  } else if (key == "plot") {
    cfg.plot_path = std::string(value);
  } else {
    throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
  }
}

void apply_config_text(std::string_view text, ExperimentConfig& cfg) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
    }
    apply_config_value(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), cfg);
  }
}

void apply_config_file(const std::string& path, ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  apply_config_text(text.str(), cfg);
}

void sort_rows(std::vector<ResultRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.algorithm, a.estimator, a.n, a.step, a.quantile) <
           std::tie(b.algorithm, b.estimator, b.n, b.step, b.quantile);
  });
}

std::vector<std::vector<std::size_t>> termination_counts(const ExperimentConfig& cfg, std::size_t n) {
  const std::size_t algos = cfg.algorithms.size();
  std::vector<std::vector<std::size_t>> counts(algos, std::vector<std::size_t>(cfg.trials));
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t trial) {
    const HiddenList input = generate_permutation(cfg.seed, trial, n);
    for (std::size_t a = 0; a < algos; ++a) {
      counts[a][trial] = count_comparisons(cfg.algorithms[a].algorithm, input);
    }
  });
  return counts;
}

std::vector<ResultRow> run_termination_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  if (cfg.mode != ExperimentMode::termination) {
    throw std::invalid_argument("run_termination_experiment: config is not in termination mode");
  }
  std::vector<ResultRow> rows;
  for (const std::size_t n : cfg.sizes) {
    const auto counts = termination_counts(cfg, n);
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
      std::vector<double> overheads;
      overheads.reserve(cfg.trials);
      for (const std::size_t c : counts[a]) overheads.push_back(relative_overhead(c, n));
      std::sort(overheads.begin(), overheads.end());
      append_quantile_rows(rows, cfg.algorithms[a], n, std::nullopt, overheads, cfg.levels);
    }
  }
  sort_rows(rows);
  return rows;
}

std::vector<ResultRow> run_profile_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  if (cfg.mode != ExperimentMode::profile) {
    throw std::invalid_argument("run_profile_experiment: config is not in profile mode");
  }
  std::vector<ResultRow> rows;
  for (const std::size_t n : cfg.sizes) {
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    // Per algorithm, quantiles for steps 1..longest run; later steps are all
    // zero and are filled in once the shared horizon is known.
    std::vector<std::vector<std::vector<double>>> bands(cfg.algorithms.size());
    std::size_t horizon = cfg.horizon;
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
      const SorterSpec spec = cfg.algorithms[a];
      std::vector<std::vector<std::uint32_t>> taus(cfg.trials);
      parallel_for(cfg.trials, cfg.threads, [&](std::size_t trial) {
        AnytimeSorter sorter(spec, generate_permutation(cfg.seed, trial, n),
                             {.track_estimates = true, .track_tau = true});
        std::vector<std::uint32_t>& out = taus[trial];
        while (!sorter.done()) {
          sorter.step();
          out.push_back(static_cast<std::uint32_t>(sorter.tau()));
        }
      });
      std::size_t longest = 0;
      for (const auto& t : taus) longest = std::max(longest, t.size());
      horizon = std::max(horizon, longest);

      std::vector<std::vector<double>>& per_step = bands[a];
      per_step.resize(longest);
      std::vector<double> column(cfg.trials);
      for (std::size_t k = 0; k < longest; ++k) {
        for (std::size_t t = 0; t < cfg.trials; ++t) {
          column[t] = k < taus[t].size() ? static_cast<double>(taus[t][k]) / pairs : 0.0;
        }
        std::sort(column.begin(), column.end());
        per_step[k].reserve(cfg.levels.size());
        for (const double level : cfg.levels) per_step[k].push_back(quantile_sorted(column, level));
      }
    }
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
      const SorterSpec& spec = cfg.algorithms[a];
      const std::string algorithm(to_string(spec.algorithm));
      const std::string estimator(to_string(spec.estimator));
      for (std::size_t k = 0; k < horizon; ++k) {
        for (std::size_t l = 0; l < cfg.levels.size(); ++l) {
          const double value = k < bands[a].size() ? bands[a][k][l] : 0.0;
          rows.push_back(ResultRow{algorithm, estimator, n, k + 1, cfg.levels[l], value});
        }
      }
    }
  }
  sort_rows(rows);
  return rows;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  return cfg.mode == ExperimentMode::termination ? run_termination_experiment(cfg)
                                                 : run_profile_experiment(cfg);
}

}  // namespace anysort
