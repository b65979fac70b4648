#include <algorithm>
#include <deque>
#include <utility>

#include "sort_context.hpp"

namespace anysort::detail {

namespace {

// Partitions [lo, hi) around the element at lo and returns the pivot's final
// position. The working list always reads
//   [compared smaller..., pivot, unseen..., compared larger...]
// so the pivot moves one slot right whenever an element is found smaller.
Task<std::size_t> partition(SortContext& ctx, std::size_t lo, std::size_t hi) {
  std::vector<std::size_t>& w = ctx.working();
  std::size_t pivot_pos = lo;
  std::size_t unseen_end = hi;
  while (pivot_pos + 1 < unseen_end) {
    const std::size_t candidate = w[unseen_end - 1];
    const bool smaller = co_await ctx.less(candidate, w[pivot_pos]);
    if (smaller) {
      w[unseen_end - 1] = w[pivot_pos + 1];
      w[pivot_pos + 1] = w[pivot_pos];
      w[pivot_pos] = candidate;
      ++pivot_pos;
    } else {
      --unseen_end;
    }
  }
  co_return pivot_pos;
}

Task<void> quicksort_range(SortContext& ctx, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) co_return;
  const std::size_t pivot_pos = co_await partition(ctx, lo, hi);
  co_await quicksort_range(ctx, lo, pivot_pos);
  co_await quicksort_range(ctx, pivot_pos + 1, hi);
}

// Hoare's selection: afterwards w[k] holds the element of rank k - lo within
// [lo, hi), everything left of it smaller and everything right of it larger.
Task<void> select(SortContext& ctx, std::size_t lo, std::size_t hi, std::size_t k) {
  while (hi - lo > 1) {
    const std::size_t pivot_pos = co_await partition(ctx, lo, hi);
    if (pivot_pos == k) co_return;
    if (k < pivot_pos) {
      hi = pivot_pos;
    } else {
      lo = pivot_pos + 1;
    }
  }
}

// Merges the adjacent sorted runs [lo, mid) and [mid, hi) in place. The list
// reads [merged output..., left remainder..., right remainder...] throughout.
Task<void> merge(SortContext& ctx, std::size_t lo, std::size_t mid, std::size_t hi) {
  std::vector<std::size_t>& w = ctx.working();
  std::size_t left = lo;
  std::size_t right = mid;
  while (left < right && right < hi) {
    const bool take_right = co_await ctx.less(w[right], w[left]);
    if (take_right) {
      std::rotate(w.begin() + static_cast<std::ptrdiff_t>(left),
                  w.begin() + static_cast<std::ptrdiff_t>(right),
                  w.begin() + static_cast<std::ptrdiff_t>(right + 1));
      ++right;
    }
    ++left;
  }
}

Task<void> mergesort_range(SortContext& ctx, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) co_return;
  const std::size_t mid = lo + (hi - lo + 1) / 2;
  co_await mergesort_range(ctx, lo, mid);
  co_await mergesort_range(ctx, mid, hi);
  co_await merge(ctx, lo, mid, hi);
}

// Max-heap sift-down with the two-comparison step: larger child first, then
// child against parent.
Task<void> sift_down(SortContext& ctx, std::size_t root, std::size_t end) {
  std::vector<std::size_t>& w = ctx.working();
  while (true) {
    std::size_t child = 2 * root + 1;
    if (child >= end) co_return;
    if (child + 1 < end) {
      const bool right_larger = co_await ctx.less(w[child], w[child + 1]);
      if (right_larger) ++child;
    }
    const bool parent_smaller = co_await ctx.less(w[root], w[child]);
    if (!parent_smaller) co_return;
    std::swap(w[root], w[child]);
    root = child;
  }
}

}  // namespace

Task<void> quicksort_task(SortContext& ctx) { co_await quicksort_range(ctx, 0, ctx.size()); }

Task<void> asort_task(SortContext& ctx) {
  std::deque<std::pair<std::size_t, std::size_t>> segments;
  segments.emplace_back(0, ctx.size());
  while (!segments.empty()) {
    const std::size_t lo = segments.front().first;
    const std::size_t hi = segments.front().second;
    segments.pop_front();
    if (hi - lo < 2) continue;
    const std::size_t median = lo + (hi - lo - 1) / 2;
    co_await select(ctx, lo, hi, median);
    segments.emplace_back(lo, median);
    segments.emplace_back(median + 1, hi);
  }
}

Task<void> mergesort_dfs_task(SortContext& ctx) { co_await mergesort_range(ctx, 0, ctx.size()); }

Task<void> mergesort_bfs_task(SortContext& ctx) {
  const std::size_t n = ctx.size();
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo + width < n; lo += 2 * width) {
      co_await merge(ctx, lo, lo + width, std::min(lo + 2 * width, n));
    }
  }
}

Task<void> heapsort_task(SortContext& ctx) {
  const std::size_t n = ctx.size();
  ctx.set_reversed_prefix(n);
  for (std::size_t i = n / 2; i > 0; --i) {
    co_await sift_down(ctx, i - 1, n);
  }
  std::vector<std::size_t>& w = ctx.working();
  for (std::size_t end = n; end > 1; --end) {
    std::swap(w[0], w[end - 1]);
    ctx.set_reversed_prefix(end - 1);
    co_await sift_down(ctx, 0, end - 1);
  }
  ctx.set_reversed_prefix(0);
}

}  // namespace anysort::detail
