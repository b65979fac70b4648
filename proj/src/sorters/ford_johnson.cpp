#include <algorithm>
#include <utility>

#include "sort_context.hpp"

namespace anysort::detail {

namespace {

// Jacobsthal-style group bounds 1, 3, 5, 11, 21, 43, ... for merge-insertion.
std::size_t group_bound(std::size_t k) {
  std::size_t prev = 1;
  std::size_t cur = 1;
  for (std::size_t i = 1; i < k; ++i) {
    const std::size_t next = cur + 2 * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Task<std::vector<std::size_t>> merge_insertion(SortContext& ctx, std::vector<std::size_t> items) {
  const std::size_t m = items.size();
  if (m < 2) co_return items;

  const std::size_t half = m / 2;
  std::vector<std::size_t> winners(half);
  std::vector<std::pair<std::size_t, std::size_t>> loser_of(half);  // (winner, loser)
  for (std::size_t t = 0; t < half; ++t) {
    const std::size_t a = items[2 * t];
    const std::size_t b = items[2 * t + 1];
    const bool a_smaller = co_await ctx.less(a, b);
    winners[t] = a_smaller ? b : a;
    loser_of[t] = {winners[t], a_smaller ? a : b};
  }
  std::sort(loser_of.begin(), loser_of.end());

  std::vector<std::size_t> main_chain = co_await merge_insertion(ctx, std::move(winners));

  // pend[t] is the loser paired with the (t+1)-th smallest winner.
  std::vector<std::size_t> pend(half);
  for (std::size_t t = 0; t < half; ++t) {
    const auto it = std::lower_bound(loser_of.begin(), loser_of.end(),
                                     std::make_pair(main_chain[t], std::size_t{0}));
    pend[t] = it->second;
  }
  const std::vector<std::size_t> partners = main_chain;

  std::vector<std::size_t> chain;
  chain.reserve(m);
  chain.push_back(pend[0]);
  chain.insert(chain.end(), main_chain.begin(), main_chain.end());

  // Pending elements are numbered 1..count; number half+1 is the unpaired
  // straggler of an odd-sized input, bounded only by the whole chain.
  const std::size_t count = half + (m % 2);
  std::size_t done_upto = 1;
  for (std::size_t k = 2; done_upto < count; ++k) {
    const std::size_t top = std::min(group_bound(k), count);
    for (std::size_t i = top; i > done_upto; --i) {
      const bool paired = i <= half;
      const std::size_t item = paired ? pend[i - 1] : items.back();
      std::size_t hi = chain.size();
      if (paired) {
        hi = static_cast<std::size_t>(std::find(chain.begin(), chain.end(), partners[i - 1]) -
                                      chain.begin());
      }
      std::size_t lo = 0;
      while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const bool below = co_await ctx.less(item, chain[mid]);
        if (below) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(lo), item);
    }
    done_upto = top;
  }
  co_return chain;
}

}  // namespace

Task<void> ford_johnson_task(SortContext& ctx) {
  std::vector<std::size_t> sorted = co_await merge_insertion(ctx, ctx.working());
  ctx.working() = std::move(sorted);
}

}  // namespace anysort::detail
