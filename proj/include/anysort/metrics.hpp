#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "anysort/sorters.hpp"

namespace anysort {

/// Inversions of a permutation of 0..n-1 relative to the identity, counted by
/// merge sort in O(n log n). Throws std::invalid_argument on a non-permutation.
std::uint64_t kendall_tau(std::span<const std::size_t> ranks);

/// kendall_tau / (n(n-1)/2). Requires n >= 2.
double normalized_tau(std::span<const std::size_t> ranks);

/// Information-theoretic lower bound on comparisons,
/// n log2(n) - n / ln(2) + log2(2 pi n) / 2. Requires n >= 2.
double itlb(std::size_t n);

/// Percentage of comparisons above itlb(n); negative below the bound.
double relative_overhead(std::size_t comparisons, std::size_t n);

/// k -> tau(X_k) for one run; entry k-1 is tau(X_k).
struct PerformanceProfile {
  std::size_t n = 0;
  std::vector<std::uint64_t> tau_by_step;
  std::size_t total_comparisons = 0;
};

/// Profile of a recorded trace padded with zeros up to `horizon` steps: past
/// termination X_k is the sorted list. Throws if horizon < total comparisons.
PerformanceProfile profile(const ComparisonTrace& trace, std::size_t horizon);

/// Tracks tau across a sequence of estimates given in rank space. Only the
/// span between the first and last changed positions is recounted, since
/// pairs with an element outside it keep their relative order.
class TauTracker {
 public:
  explicit TauTracker(std::size_t n);
  std::uint64_t update(std::span<const std::size_t> ranks);
  std::uint64_t value() const { return tau_; }

 private:
  std::vector<std::size_t> previous_;
  std::vector<std::size_t> scratch_;
  std::vector<std::size_t> merge_buffer_;
  std::uint64_t tau_ = 0;
  bool primed_ = false;
};

/// Quantile levels as fractions: 2.5%, 25%, 50%, 75%, 97.5%.
std::vector<double> default_quantile_levels();

/// Empirical quantile with linear interpolation between order statistics:
/// for sorted x_0..x_{N-1}, h = (N-1) p and the result is
/// x_floor(h) + (h - floor(h)) (x_floor(h)+1 - x_floor(h)).
/// `sorted` must be ascending and nonempty.
double quantile_sorted(std::span<const double> sorted, double level);

struct QuantileBands {
  std::vector<double> levels;
  /// values[step][level]
  std::vector<std::vector<double>> values;
};

/// Per-step quantiles across equally long series. Throws on empty input or
/// mismatched lengths.
QuantileBands quantile_bands(std::span<const std::vector<double>> series,
                             std::span<const double> levels);
QuantileBands quantile_bands(std::span<const PerformanceProfile> profiles,
                             std::span<const double> levels);

}  // namespace anysort
