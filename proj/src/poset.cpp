#include "anysort/poset.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace anysort {

namespace {

template <typename F>
void for_each_bit(std::span<const std::uint64_t> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t bits = row[w];
    while (bits != 0) {
      f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

// ORs `src` into `dst` and returns how many bits were newly set.
std::uint32_t merge_row(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::uint32_t added = 0;
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t fresh = src[w] & ~dst[w];
    added += static_cast<std::uint32_t>(std::popcount(fresh));
    dst[w] |= fresh;
  }
  return added;
}

}  // namespace

PartialOrder::PartialOrder(std::size_t n)
    : n_(n),
      words_((n + 63) / 64),
      up_(n * words_, 0),
      down_(n * words_, 0),
      up_count_(n, 1),
      down_count_(n, 1),
      scratch_(2 * words_, 0) {
  if (n == 0) {
    throw std::invalid_argument("PartialOrder: element count must be positive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    up_[i * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    down_[i * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

bool PartialOrder::record(std::size_t lo, std::size_t hi) {
  if (lo >= n_ || hi >= n_) {
    throw std::out_of_range("PartialOrder::record: index out of range");
  }
  if (lo == hi) {
    throw std::invalid_argument("PartialOrder::record: an element cannot be compared with itself");
  }
  if (leq(hi, lo)) {
    throw ContradictionError("PartialOrder::record: " + std::to_string(lo) + " < " +
                             std::to_string(hi) + " contradicts the known order");
  }
  if (leq(lo, hi)) {
    return false;
  }

  // Every x <= lo becomes <= every y >= hi. Rows already containing hi (resp.
  // lo) are supersets of the new information by transitivity.
  std::uint64_t* below = scratch_.data();
  std::uint64_t* above = scratch_.data() + words_;
  std::copy_n(down_.begin() + static_cast<std::ptrdiff_t>(lo * words_), words_, below);
  std::copy_n(up_.begin() + static_cast<std::ptrdiff_t>(hi * words_), words_, above);

  for_each_bit({below, words_}, [&](std::size_t x) {
    if (leq(x, hi)) return;
    const std::uint32_t added = merge_row(&up_[x * words_], above, words_);
    up_count_[x] += added;
    relations_ += added;
  });
  for_each_bit({above, words_}, [&](std::size_t y) {
    if ((down_[y * words_ + lo / 64] >> (lo % 64)) & 1U) return;
    down_count_[y] += merge_row(&down_[y * words_], below, words_);
  });
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> PartialOrder::incomparable_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!comparable(i, j)) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

std::vector<std::size_t> PartialOrder::sorted_order() const {
  if (!is_total()) {
    throw std::logic_error("PartialOrder::sorted_order: order is not total");
  }
  std::vector<std::size_t> order(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    order[down_count_[i] - 1] = i;
  }
  return order;
}

}  // namespace anysort
