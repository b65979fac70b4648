#include "anysort/estimators.hpp"

#include <string>

namespace anysort {

namespace {

// rho(i) < rho(j)  <=>  d(i) * I(j) < d(j) * I(i)
bool rho_less(const PartialOrder& po, std::size_t i, std::size_t j) {
  const std::uint64_t di = po.descendants(i);
  const std::uint64_t dj = po.descendants(j);
  const std::uint64_t lhs = di * (dj + po.ancestors(j));
  const std::uint64_t rhs = dj * (di + po.ancestors(i));
  return lhs < rhs || (lhs == rhs && i < j);
}

bool delta_less(const PartialOrder& po, std::size_t i, std::size_t j) {
  const std::int64_t si = std::int64_t{po.descendants(i)} - po.ancestors(i);
  const std::int64_t sj = std::int64_t{po.descendants(j)} - po.ancestors(j);
  return si < sj || (si == sj && i < j);
}

template <typename Less, typename OnExchange>
void insertion_sort(Estimate& order, Less less, OnExchange on_exchange) {
  for (std::size_t k = 1; k < order.size(); ++k) {
    const std::size_t item = order[k];
    std::size_t p = k;
    while (p > 0 && less(item, order[p - 1])) {
      on_exchange(order[p - 1], item);
      order[p] = order[p - 1];
      --p;
    }
    order[p] = item;
  }
}

constexpr auto kIgnoreExchange = [](std::size_t, std::size_t) {};

}  // namespace

std::vector<double> rho_scores(const PartialOrder& po) {
  std::vector<double> scores(po.size());
  for (std::size_t i = 0; i < po.size(); ++i) {
    const double d = po.descendants(i);
    scores[i] = d / (d + po.ancestors(i));
  }
  return scores;
}

std::vector<std::int64_t> delta_scores(const PartialOrder& po) {
  std::vector<std::int64_t> scores(po.size());
  for (std::size_t i = 0; i < po.size(); ++i) {
    scores[i] = std::int64_t{po.descendants(i)} - po.ancestors(i);
  }
  return scores;
}

std::vector<std::int64_t> info_scores(const PartialOrder& po) {
  std::vector<std::int64_t> scores(po.size());
  for (std::size_t i = 0; i < po.size(); ++i) {
    scores[i] = std::int64_t{po.descendants(i)} + po.ancestors(i);
  }
  return scores;
}

Estimate rho_estimate(const PartialOrder& po) {
  Estimate order(po.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return rho_less(po, i, j); });
  return order;
}

Estimate delta_estimate(const PartialOrder& po) {
  Estimate order(po.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return delta_less(po, i, j); });
  return order;
}

ScoreEstimate::ScoreEstimate(ScoreKind kind, std::size_t n) : kind_(kind), order_(n) {
  std::iota(order_.begin(), order_.end(), std::size_t{0});
}

const Estimate& ScoreEstimate::refresh(const PartialOrder& po) {
  if (po.size() != order_.size()) {
    throw std::invalid_argument("ScoreEstimate::refresh: size mismatch");
  }
  if (kind_ == ScoreKind::rho) {
    insertion_sort(
        order_, [&](std::size_t i, std::size_t j) { return rho_less(po, i, j); }, kIgnoreExchange);
  } else {
    insertion_sort(
        order_, [&](std::size_t i, std::size_t j) { return delta_less(po, i, j); }, kIgnoreExchange);
  }
  return order_;
}

const Estimate& ScoreEstimate::refresh(const PartialOrder& po, std::span<const std::size_t> ranks,
                                       std::uint64_t& tau) {
  if (po.size() != order_.size() || ranks.size() != order_.size()) {
    throw std::invalid_argument("ScoreEstimate::refresh: size mismatch");
  }
  // `earlier` was ahead of `later` and now falls behind it.
  const auto on_exchange = [&](std::size_t earlier, std::size_t later) {
    if (ranks[earlier] < ranks[later]) {
      ++tau;
    } else {
      --tau;
    }
  };
  if (kind_ == ScoreKind::rho) {
    insertion_sort(
        order_, [&](std::size_t i, std::size_t j) { return rho_less(po, i, j); }, on_exchange);
  } else {
    insertion_sort(
        order_, [&](std::size_t i, std::size_t j) { return delta_less(po, i, j); }, on_exchange);
  }
  return order_;
}

void for_each_linear_extension(const PartialOrder& po,
                               const std::function<void(std::span<const std::size_t>)>& visit,
                               EnumerationLimits limits) {
  const std::size_t n = po.size();
  if (n > limits.max_elements) {
    throw EnumerationLimitError("linear extension enumeration refused for n = " +
                                std::to_string(n) + " (limit " +
                                std::to_string(limits.max_elements) + ")");
  }
  // waiting[i]: strict predecessors of i not yet placed.
  std::vector<std::uint32_t> waiting(n);
  for (std::size_t i = 0; i < n; ++i) waiting[i] = po.descendants(i) - 1;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> prefix;
  prefix.reserve(n);
  std::size_t emitted = 0;

  std::function<void()> extend = [&]() {
    if (prefix.size() == n) {
      if (++emitted > limits.max_extensions) {
        throw EnumerationLimitError("linear extension enumeration exceeded " +
                                    std::to_string(limits.max_extensions) + " extensions");
      }
      visit(prefix);
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (placed[x] || waiting[x] != 0) continue;
      placed[x] = true;
      prefix.push_back(x);
      for (std::size_t y = 0; y < n; ++y) {
        if (y != x && po.leq(x, y)) --waiting[y];
      }
      extend();
      for (std::size_t y = 0; y < n; ++y) {
        if (y != x && po.leq(x, y)) ++waiting[y];
      }
      prefix.pop_back();
      placed[x] = false;
    }
  };
  extend();
}

std::vector<Estimate> linear_extensions(const PartialOrder& po, EnumerationLimits limits) {
  std::vector<Estimate> all;
  for_each_linear_extension(
      po, [&](std::span<const std::size_t> ext) { all.emplace_back(ext.begin(), ext.end()); },
      limits);
  return all;
}

std::vector<double> exact_average_heights(const PartialOrder& po, EnumerationLimits limits) {
  std::vector<double> sums(po.size(), 0.0);
  std::size_t count = 0;
  for_each_linear_extension(
      po,
      [&](std::span<const std::size_t> ext) {
        for (std::size_t p = 0; p < ext.size(); ++p) sums[ext[p]] += static_cast<double>(p);
        ++count;
      },
      limits);
  for (double& s : sums) s /= static_cast<double>(count);
  return sums;
}

}  // namespace anysort
