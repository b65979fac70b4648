#include "anysort/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anysort {

namespace {

std::uint64_t count_inversions(std::span<std::size_t> values, std::span<std::size_t> buffer) {
  const std::size_t n = values.size();
  std::uint64_t inversions = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
      const std::size_t mid = lo + width;
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo;
      std::size_t j = mid;
      std::size_t out = lo;
      while (i < mid && j < hi) {
        if (values[j] < values[i]) {
          inversions += mid - i;
          buffer[out++] = values[j++];
        } else {
          buffer[out++] = values[i++];
        }
      }
      while (i < mid) buffer[out++] = values[i++];
      while (j < hi) buffer[out++] = values[j++];
      std::copy(buffer.begin() + static_cast<std::ptrdiff_t>(lo),
                buffer.begin() + static_cast<std::ptrdiff_t>(hi),
                values.begin() + static_cast<std::ptrdiff_t>(lo));
    }
  }
  return inversions;
}

void require_permutation(std::span<const std::size_t> ranks) {
  std::vector<bool> seen(ranks.size(), false);
  for (const std::size_t r : ranks) {
    if (r >= ranks.size() || seen[r]) {
      throw std::invalid_argument("kendall_tau: input is not a permutation of 0..n-1");
    }
    seen[r] = true;
  }
}

}  // namespace

std::uint64_t kendall_tau(std::span<const std::size_t> ranks) {
  require_permutation(ranks);
  std::vector<std::size_t> values(ranks.begin(), ranks.end());
  std::vector<std::size_t> buffer(values.size());
  return count_inversions(values, buffer);
}

double normalized_tau(std::span<const std::size_t> ranks) {
  const std::size_t n = ranks.size();
  if (n < 2) {
    throw std::invalid_argument("normalized_tau: needs at least two elements");
  }
  return static_cast<double>(kendall_tau(ranks)) / (static_cast<double>(n) * (n - 1) / 2.0);
}

double itlb(std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("itlb: needs n >= 2");
  }
  const double x = static_cast<double>(n);
  return x * std::log2(x) - x / std::numbers::ln2 + std::log2(2.0 * std::numbers::pi * x) / 2.0;
}

double relative_overhead(std::size_t comparisons, std::size_t n) {
  const double bound = itlb(n);
  return 100.0 * (static_cast<double>(comparisons) - bound) / bound;
}

PerformanceProfile profile(const ComparisonTrace& trace, std::size_t horizon) {
  if (horizon < trace.total_comparisons) {
    throw std::invalid_argument("profile: horizon shorter than the trace");
  }
  PerformanceProfile result;
  result.n = trace.ranks.size();
  result.total_comparisons = trace.total_comparisons;
  result.tau_by_step.assign(horizon, 0);
  std::vector<std::size_t> in_ranks(result.n);
  for (std::size_t k = 0; k < trace.estimates.size(); ++k) {
    const Estimate& est = trace.estimates[k];
    for (std::size_t p = 0; p < est.size(); ++p) in_ranks[p] = trace.ranks[est[p]];
    result.tau_by_step[k] = kendall_tau(in_ranks);
  }
  return result;
}

TauTracker::TauTracker(std::size_t n) : previous_(n), scratch_(n), merge_buffer_(n) {}

std::uint64_t TauTracker::update(std::span<const std::size_t> ranks) {
  if (ranks.size() != previous_.size()) {
    throw std::invalid_argument("TauTracker::update: size mismatch");
  }
  if (!primed_) {
    tau_ = kendall_tau(ranks);
    std::copy(ranks.begin(), ranks.end(), previous_.begin());
    primed_ = true;
    return tau_;
  }
  std::size_t first = 0;
  const std::size_t n = ranks.size();
  while (first < n && ranks[first] == previous_[first]) ++first;
  if (first == n) return tau_;
  std::size_t last = n;
  while (ranks[last - 1] == previous_[last - 1]) --last;

  const std::size_t width = last - first;
  const std::span<std::size_t> window(scratch_.data(), width);
  const std::span<std::size_t> buffer(merge_buffer_.data(), width);
  std::copy_n(previous_.begin() + static_cast<std::ptrdiff_t>(first), width, window.begin());
  const std::uint64_t before = count_inversions(window, buffer);
  std::copy_n(ranks.begin() + static_cast<std::ptrdiff_t>(first), width, window.begin());
  const std::uint64_t after = count_inversions(window, buffer);
  tau_ = tau_ - before + after;
  std::copy_n(ranks.begin() + static_cast<std::ptrdiff_t>(first), width,
              previous_.begin() + static_cast<std::ptrdiff_t>(first));
  return tau_;
}

std::vector<double> default_quantile_levels() { return {0.025, 0.25, 0.5, 0.75, 0.975}; }

double quantile_sorted(std::span<const double> sorted, double level) {
  if (sorted.empty()) {
    throw std::invalid_argument("quantile_sorted: empty sample");
  }
  if (level < 0.0 || level > 1.0) {
    throw std::invalid_argument("quantile_sorted: level outside [0, 1]");
  }
  const double h = static_cast<double>(sorted.size() - 1) * level;
  const auto lower = static_cast<std::size_t>(std::floor(h));
  if (lower + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lower);
  return sorted[lower] + frac * (sorted[lower + 1] - sorted[lower]);
}

QuantileBands quantile_bands(std::span<const std::vector<double>> series,
                             std::span<const double> levels) {
  if (series.empty()) {
    throw std::invalid_argument("quantile_bands: no series given");
  }
  const std::size_t steps = series.front().size();
  for (const auto& s : series) {
    if (s.size() != steps) {
      throw std::invalid_argument("quantile_bands: series lengths differ");
    }
  }
  QuantileBands bands;
  bands.levels.assign(levels.begin(), levels.end());
  bands.values.resize(steps);
  std::vector<double> column(series.size());
  for (std::size_t k = 0; k < steps; ++k) {
    for (std::size_t t = 0; t < series.size(); ++t) column[t] = series[t][k];
    std::sort(column.begin(), column.end());
    bands.values[k].reserve(levels.size());
    for (const double level : levels) bands.values[k].push_back(quantile_sorted(column, level));
  }
  return bands;
}

QuantileBands quantile_bands(std::span<const PerformanceProfile> profiles,
                             std::span<const double> levels) {
  std::vector<std::vector<double>> series;
  series.reserve(profiles.size());
  for (const auto& p : profiles) series.emplace_back(p.tau_by_step.begin(), p.tau_by_step.end());
  return quantile_bands(series, levels);
}

}  // namespace anysort
