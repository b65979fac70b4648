#pragma once

#include <coroutine>
#include <cstddef>
#include <memory>
#include <vector>

#include "anysort/poset.hpp"
#include "anysort/task.hpp"

namespace anysort::detail {

/// State shared between the driver and a running algorithm coroutine.
class SortContext {
 public:
  explicit SortContext(std::size_t n) : working_(n) {
    for (std::size_t i = 0; i < n; ++i) working_[i] = i;
  }

  std::size_t size() const { return working_.size(); }

  /// The algorithm's current list of indices. Algorithms with a natural
  /// estimate keep it meaningful after every comparison, and every algorithm
  /// leaves the sorted order here when it finishes.
  std::vector<std::size_t>& working() { return working_; }
  const std::vector<std::size_t>& working() const { return working_; }

  /// The first `count` entries of the working list are presented reversed in
  /// the natural estimate (the heap region of heapsort).
  void set_reversed_prefix(std::size_t count) { reversed_prefix_ = count; }
  std::size_t reversed_prefix() const { return reversed_prefix_; }

  void keep_order() {
    if (!order_) order_ = std::make_unique<PartialOrder>(working_.size());
  }
  PartialOrder* order() { return order_.get(); }
  const PartialOrder* order() const { return order_.get(); }

  struct LessAwaiter {
    SortContext* ctx;
    std::size_t first;
    std::size_t second;

    bool await_ready() const noexcept { return false; }
    void await_suspend(std::coroutine_handle<> h) noexcept { ctx->park(h, first, second); }
    bool await_resume() const noexcept { return ctx->answer_; }
  };

  /// co_await ctx.less(i, j) yields values[i] < values[j].
  LessAwaiter less(std::size_t i, std::size_t j) { return LessAwaiter{this, i, j}; }

  // Driver side.
  bool parked() const { return static_cast<bool>(parked_); }
  std::size_t pending_first() const { return pending_first_; }
  std::size_t pending_second() const { return pending_second_; }
  void resume_with(bool answer) {
    answer_ = answer;
    auto h = parked_;
    parked_ = {};
    h.resume();
  }

  Task<void> root;
  std::size_t comparisons = 0;

 private:
  void park(std::coroutine_handle<> h, std::size_t i, std::size_t j) noexcept {
    parked_ = h;
    pending_first_ = i;
    pending_second_ = j;
  }

  std::vector<std::size_t> working_;
  std::size_t reversed_prefix_ = 0;
  std::unique_ptr<PartialOrder> order_;
  std::coroutine_handle<> parked_;
  std::size_t pending_first_ = 0;
  std::size_t pending_second_ = 0;
  bool answer_ = false;
};

Task<void> corsort_task(SortContext& ctx);
Task<void> quicksort_task(SortContext& ctx);
Task<void> asort_task(SortContext& ctx);
Task<void> mergesort_dfs_task(SortContext& ctx);
Task<void> mergesort_bfs_task(SortContext& ctx);
Task<void> heapsort_task(SortContext& ctx);
Task<void> ford_johnson_task(SortContext& ctx);

}  // namespace anysort::detail
