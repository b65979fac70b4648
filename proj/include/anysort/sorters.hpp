#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anysort/estimators.hpp"
#include "anysort/poset.hpp"

namespace anysort {

enum class Algorithm { corsort, quicksort, asort, mergesort_dfs, mergesort_bfs, heapsort, ford_johnson };

/// How the estimate X_k is produced after each comparison.
///  - natural: the algorithm's own working list (quicksort, mergesort_dfs, heapsort)
///  - rho, delta: score estimate over the comparison history
///  - none: the input order until termination, then the sorted list
enum class Estimator { natural, rho, delta, none };

struct SorterSpec {
  Algorithm algorithm = Algorithm::corsort;
  Estimator estimator = Estimator::rho;

  friend bool operator==(const SorterSpec&, const SorterSpec&) = default;
};

std::string_view to_string(Algorithm algorithm);
std::string_view to_string(Estimator estimator);
/// "algorithm:estimator", e.g. "corsort:rho".
std::string to_string(const SorterSpec& spec);

Algorithm parse_algorithm(std::string_view text);
Estimator parse_estimator(std::string_view text);
/// Parses "algorithm:estimator". Throws std::invalid_argument on unknown names
/// or on a natural estimator for an algorithm without an intrinsic list.
SorterSpec parse_sorter_spec(std::string_view text);

bool has_natural_estimate(Algorithm algorithm);
void validate(const SorterSpec& spec);

using Key = std::int64_t;
/// The values being sorted. Only the driver ever looks at them; algorithms and
/// estimators work on indices.
using HiddenList = std::vector<Key>;

class DuplicateKeyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Comparison {
  std::size_t first = 0;
  std::size_t second = 0;
  bool first_smaller = false;  // values[first] < values[second]

  std::size_t smaller() const { return first_smaller ? first : second; }
  std::size_t larger() const { return first_smaller ? second : first; }

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

struct ComparisonTrace {
  std::vector<Comparison> steps;
  /// estimates[k - 1] is X_k, the estimate after the k-th comparison.
  std::vector<Estimate> estimates;
  std::size_t total_comparisons = 0;
  /// ranks[i] is the true 0-based rank of index i.
  std::vector<std::size_t> ranks;
  Estimate final_order;
};

/// Pull-based stepwise driver. Each call to step() performs exactly one
/// comparison of hidden values; estimate() then reflects everything the
/// algorithm did with that outcome. The caller may stop at any point.
class AnytimeSorter {
 public:
  struct Options {
    /// When false no estimate is maintained (and no comparison history is
    /// kept unless the algorithm itself needs it); only counting is cheap.
    bool track_estimates = true;
    /// Keep tau() available: the Kendall tau of the current estimate against
    /// the hidden values.
    bool track_tau = false;
  };

  AnytimeSorter(SorterSpec spec, HiddenList values);
  AnytimeSorter(SorterSpec spec, HiddenList values, Options options);
  AnytimeSorter(AnytimeSorter&&) noexcept;
  AnytimeSorter& operator=(AnytimeSorter&&) noexcept;
  ~AnytimeSorter();

  const SorterSpec& spec() const { return spec_; }
  std::size_t size() const;
  bool done() const;
  std::size_t comparisons() const;

  /// The pair the algorithm is waiting on, if it has not terminated.
  std::optional<std::pair<std::size_t, std::size_t>> pending() const;

  /// Performs one comparison. Throws std::logic_error once done, and
  /// DuplicateKeyError if the two compared values are equal.
  Comparison step();

  /// Steps until termination; returns the total comparison count.
  std::size_t run_to_completion();

  /// Current estimate X_k. After termination this is the sorted order.
  const Estimate& estimate();

  /// Inversions of estimate() against the true order. Requires
  /// Options::track_tau.
  std::uint64_t tau();

  /// Whether the last comparison added information to the comparison
  /// history. Only meaningful when order() is non-null.
  bool last_step_informative() const { return last_informative_; }

  /// Comparison history closure, or nullptr when it is not being kept.
  const PartialOrder* order() const;

  /// The sorted order of indices. Throws std::logic_error before termination.
  const Estimate& result() const;

 private:
  struct State;

  SorterSpec spec_;
  std::unique_ptr<State> state_;
  bool last_informative_ = false;
};

/// Runs to completion and records every comparison and estimate snapshot.
ComparisonTrace run(const SorterSpec& spec, const HiddenList& input);

/// Runs to completion without estimates and returns the comparison count.
std::size_t count_comparisons(Algorithm algorithm, const HiddenList& input);

ComparisonTrace corsort(const HiddenList& input);
ComparisonTrace quicksort_anytime(const HiddenList& input);
ComparisonTrace asort(const HiddenList& input);
ComparisonTrace mergesort_dfs(const HiddenList& input);
ComparisonTrace mergesort_bfs(const HiddenList& input);
ComparisonTrace heapsort_anytime(const HiddenList& input);
ComparisonTrace ford_johnson(const HiddenList& input);

/// Corsort's choice: among incomparable pairs, the one minimizing
/// (|Delta(i) - Delta(j)|, max(I(i), I(j))) lexicographically, remaining ties
/// going to the smallest (i, j). Returned with i < j. Throws std::logic_error
/// on a total order.
std::pair<std::size_t, std::size_t> corsort_next_pair(const PartialOrder& po);

/// corsort_next_pair with scratch space reused across calls.
class CorsortPairSelector {
 public:
  std::pair<std::size_t, std::size_t> next(const PartialOrder& po);

 private:
  struct Bucket {
    std::uint32_t count = 0;
    std::uint32_t first = 0;
    std::uint32_t second = 0;
    std::uint32_t found = 0;
    std::uint64_t low1 = 0;
    std::uint64_t low2 = 0;
  };

  std::vector<Bucket> buckets_;  // indexed by Delta + n - 1
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint32_t> by_delta_;
  std::vector<std::uint32_t> delta_rank_;
};

/// True 0-based rank of every index. Throws DuplicateKeyError on repeats.
std::vector<std::size_t> ranks_of(const HiddenList& values);

}  // namespace anysort
