#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "anysort/poset.hpp"

namespace anysort {

/// A guessed total order: position p holds the index believed p-th smallest.
using Estimate = std::vector<std::size_t>;

/// rho(i) = d(i) / (d(i) + a(i)), the estimated relative rank of i.
std::vector<double> rho_scores(const PartialOrder& po);
/// Delta(i) = d(i) - a(i).
std::vector<std::int64_t> delta_scores(const PartialOrder& po);
/// I(i) = d(i) + a(i), how much is known about i.
std::vector<std::int64_t> info_scores(const PartialOrder& po);

/// Indices sorted by ascending score, ties broken by ascending index.
template <typename Score>
Estimate estimate_from_scores(std::span<const Score> scores) {
  Estimate order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return scores[i] < scores[j]; });
  return order;
}

template <typename Score>
Estimate estimate_from_scores(const std::vector<Score>& scores) {
  return estimate_from_scores(std::span<const Score>(scores));
}

/// rho estimate computed with exact integer cross-multiplication.
Estimate rho_estimate(const PartialOrder& po);
Estimate delta_estimate(const PartialOrder& po);

enum class ScoreKind { rho, delta };

/// Keeps a score-sorted estimate up to date as the order grows. Each refresh
/// re-sorts the previous estimate by insertion, which is linear when few
/// relative positions change between two comparisons.
class ScoreEstimate {
 public:
  ScoreEstimate(ScoreKind kind, std::size_t n);

  const Estimate& refresh(const PartialOrder& po);
  /// Same, also keeping `tau` (inversions of the estimate against `ranks`)
  /// current: every adjacent exchange moves it by exactly one.
  const Estimate& refresh(const PartialOrder& po, std::span<const std::size_t> ranks,
                          std::uint64_t& tau);
  const Estimate& order() const { return order_; }

 private:
  ScoreKind kind_;
  Estimate order_;
};

/// Raised when exhaustive enumeration would exceed its budget.
class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
  std::size_t max_elements = 12;
  std::size_t max_extensions = 10'000'000;
};

/// Calls `visit` on every linear extension of `po`, in lexicographic order of
/// the index sequence. Test-scale only: counting extensions is #P-complete.
void for_each_linear_extension(const PartialOrder& po,
                               const std::function<void(std::span<const std::size_t>)>& visit,
                               EnumerationLimits limits = {});

std::vector<Estimate> linear_extensions(const PartialOrder& po, EnumerationLimits limits = {});

/// Mean 0-based position of each index over all linear extensions.
std::vector<double> exact_average_heights(const PartialOrder& po, EnumerationLimits limits = {});

}  // namespace anysort
