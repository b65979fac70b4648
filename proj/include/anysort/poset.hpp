#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace anysort {

/// Raised when a comparison outcome contradicts what the order already implies.
class ContradictionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Transitively closed order over indices 0..n-1 built from comparison
/// outcomes. Both the up-set and the down-set of every element are kept as
/// bit rows, together with their sizes, so that descendant / ancestor counts
/// are O(1) and a new comparison costs O(n^2 / 64) in the worst case.
///
/// Counts include the element itself: a fresh order has d(i) = a(i) = 1.
class PartialOrder {
 public:
  explicit PartialOrder(std::size_t n);

  std::size_t size() const { return n_; }

  /// Records `lo < hi` and closes transitively. Returns false when the pair
  /// was already ordered that way (a no-op). Throws ContradictionError when
  /// `hi < lo` is already implied.
  bool record(std::size_t lo, std::size_t hi);

  bool leq(std::size_t i, std::size_t j) const {
    return (up_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  /// d(i) = |{j : j <= i}|
  std::uint32_t descendants(std::size_t i) const { return down_count_[i]; }
  /// a(i) = |{j : i <= j}|
  std::uint32_t ancestors(std::size_t i) const { return up_count_[i]; }

  std::span<const std::uint32_t> descendant_counts() const { return down_count_; }
  std::span<const std::uint32_t> ancestor_counts() const { return up_count_; }

  /// Number of ordered pairs (i, j), i != j, with i <= j.
  std::size_t relation_count() const { return relations_; }

  bool is_total() const { return relations_ == n_ * (n_ - 1) / 2; }

  /// Unordered pairs (i, j), i < j, that are not yet comparable, in
  /// lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> incomparable_pairs() const;

  /// The unique linear extension of a total order. Throws std::logic_error
  /// when the order is not total yet.
  std::vector<std::size_t> sorted_order() const;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> up_;    // row i: { j : i <= j }
  std::vector<std::uint64_t> down_;  // row i: { j : j <= i }
  std::vector<std::uint32_t> up_count_;
  std::vector<std::uint32_t> down_count_;
  std::size_t relations_ = 0;
  std::vector<std::uint64_t> scratch_;
};

}  // namespace anysort
