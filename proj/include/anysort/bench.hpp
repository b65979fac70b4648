#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anysort/sorters.hpp"

namespace anysort {

enum class ExperimentMode { termination, profile };

std::string_view to_string(ExperimentMode mode);
ExperimentMode parse_mode(std::string_view text);

struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::termination;
  std::vector<std::size_t> sizes;
  std::size_t trials = 10'000;
  std::uint64_t seed = 0;
  std::vector<SorterSpec> algorithms;
  std::vector<double> levels;  // fractions in [0, 1]
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  std::size_t threads = 0;
  /// Profile mode: minimum number of steps reported. The reported horizon is
  /// never shorter than the longest run.
  std::size_t horizon = 0;
  std::string csv_path;
  std::string plot_path;
};

/// Defaults for a mode: the standard sizes, algorithms and quantile levels,
/// 10,000 trials, seed 0.
ExperimentConfig default_config(ExperimentMode mode);

/// Throws std::invalid_argument on an unusable configuration.
void validate(const ExperimentConfig& cfg);

/// Applies `key=value` lines (blank lines and `#` comments ignored) on top of
/// `cfg`. Keys: mode, sizes, trials, seed, algos, levels, threads, horizon,
/// out, plot.
void apply_config_text(std::string_view text, ExperimentConfig& cfg);
void apply_config_file(const std::string& path, ExperimentConfig& cfg);
void apply_config_value(std::string_view key, std::string_view value, ExperimentConfig& cfg);

std::vector<std::size_t> parse_size_list(std::string_view text);
std::vector<SorterSpec> parse_spec_list(std::string_view text);
std::vector<double> parse_level_list(std::string_view text);

struct ResultRow {
  std::string algorithm;
  std::string estimator;
  std::size_t n = 0;
  std::optional<std::size_t> step;  // profile mode only
  double quantile = 0.0;            // level as a fraction
  double value = 0.0;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

/// Orders rows by (algorithm, estimator, n, step, quantile).
void sort_rows(std::vector<ResultRow>& rows);

/// Per (algorithm, n): quantiles across trials of the relative overhead of
/// the comparison count over itlb(n), in percent.
std::vector<ResultRow> run_termination_experiment(const ExperimentConfig& cfg);

/// Per (algorithm, n, step): quantiles across trials of the normalized tau of
/// X_k. Every run is padded with zeros up to a horizon shared by all
/// algorithms at that n.
std::vector<ResultRow> run_profile_experiment(const ExperimentConfig& cfg);

/// Dispatches on cfg.mode.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

/// Comparison counts of every (algorithm, trial) at one size; counts[a][t].
std::vector<std::vector<std::size_t>> termination_counts(const ExperimentConfig& cfg, std::size_t n);

/// CSV with header `algorithm,estimator,n,step,quantile,value`, LF line
/// endings, values with 17 significant digits. Rows are written in the order
/// given.
void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);
std::vector<ResultRow> read_csv(std::istream& in);

/// Writes sorted rows to `path` through a temporary file renamed into place,
/// so a failed write never leaves partial results. Throws on empty rows or
/// I/O failure.
void emit_csv(std::vector<ResultRow> rows, const std::string& path);
std::vector<ResultRow> load_csv(const std::string& path);

/// Standalone SVG: per algorithm a median polyline and translucent quantile
/// bands. Rows carrying a step are drawn as performance profiles, the others
/// as overhead against n on a logarithmic axis.
std::string render_svg(std::vector<ResultRow> rows);
void emit_plot(const std::vector<ResultRow>& rows, const std::string& path);

}  // namespace anysort
