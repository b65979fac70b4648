#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "anysort/sorters.hpp"
#include "sort_context.hpp"

namespace anysort {

namespace {

struct Candidate {
  std::uint64_t gap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t info = 0;
  std::size_t first = 0;
  std::size_t second = 0;

  bool better_than(const Candidate& other) const {
    return std::tie(gap, info, first, second) <
           std::tie(other.gap, other.info, other.first, other.second);
  }
};

}  // namespace

std::pair<std::size_t, std::size_t> CorsortPairSelector::next(const PartialOrder& po) {
  if (po.is_total()) {
    throw std::logic_error("corsort_next_pair: the order is already total");
  }
  const std::size_t n = po.size();
  const auto down = po.descendant_counts();
  const auto up = po.ancestor_counts();
  const auto bucket_of = [&](std::size_t i) { return std::size_t{down[i]} + n - 1 - up[i]; };
  const auto info = [&](std::size_t i) { return std::uint64_t{down[i]} + up[i]; };
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

  if (buckets_.size() != 2 * n - 1) buckets_.assign(2 * n - 1, Bucket{});
  touched_.clear();

  // Equal Delta implies incomparable, so any bucket of two or more holds
  // gap-0 candidates. Within a bucket the smallest achievable max(I) is the
  // second-smallest I, and the best pair is the two lowest indices whose I
  // does not exceed it.
  bool shared = false;
  for (std::size_t i = 0; i < n; ++i) {
    Bucket& b = buckets_[bucket_of(i)];
    const std::uint64_t v = info(i);
    if (b.count++ == 0) {
      touched_.push_back(static_cast<std::uint32_t>(bucket_of(i)));
      b.first = static_cast<std::uint32_t>(i);
      b.low1 = v;
      b.low2 = kNone;
      continue;
    }
    shared = true;
    if (v < b.low1) {
      b.low2 = b.low1;
      b.low1 = v;
    } else if (v < b.low2) {
      b.low2 = v;
    }
  }

  Candidate best;
  if (shared) {
    for (const std::uint32_t id : touched_) buckets_[id].found = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Bucket& b = buckets_[bucket_of(i)];
      if (b.count < 2 || b.found >= 2 || info(i) > b.low2) continue;
      (b.found == 0 ? b.first : b.second) = static_cast<std::uint32_t>(i);
      ++b.found;
    }
    for (const std::uint32_t id : touched_) {
      const Bucket& b = buckets_[id];
      if (b.count < 2) continue;
      const Candidate c{0, b.low2, b.first, b.second};
      if (c.better_than(best)) best = c;
    }
  } else {
    // All Delta values are distinct: list elements in Delta order, then scan
    // upward from each, stopping once the gap exceeds the best found so far.
    by_delta_.clear();
    delta_rank_.clear();
    for (std::size_t id = 0; id < buckets_.size(); ++id) {
      if (buckets_[id].count == 0) continue;
      by_delta_.push_back(buckets_[id].first);
      delta_rank_.push_back(static_cast<std::uint32_t>(id));
    }
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t x = by_delta_[p];
      for (std::size_t q = p + 1; q < n; ++q) {
        const std::size_t y = by_delta_[q];
        const std::uint64_t gap = delta_rank_[q] - delta_rank_[p];
        if (gap > best.gap) break;
        if (po.comparable(x, y)) continue;
        const Candidate c{gap, std::max(info(x), info(y)), std::min(x, y), std::max(x, y)};
        if (c.better_than(best)) best = c;
      }
    }
  }
  for (const std::uint32_t id : touched_) buckets_[id].count = 0;
  return {best.first, best.second};
}

std::pair<std::size_t, std::size_t> corsort_next_pair(const PartialOrder& po) {
  CorsortPairSelector selector;
  return selector.next(po);
}

namespace detail {

Task<void> corsort_task(SortContext& ctx) {
  ctx.keep_order();
  const PartialOrder& po = *ctx.order();
  CorsortPairSelector selector;
  while (!po.is_total()) {
    const std::pair<std::size_t, std::size_t> next = selector.next(po);
    co_await ctx.less(next.first, next.second);
  }
  ctx.working() = po.sorted_order();
}

}  // namespace detail

}  // namespace anysort
