#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "anysort/metrics.hpp"
#include "anysort/sorters.hpp"
#include "sort_context.hpp"

namespace anysort {

namespace {

constexpr std::array kAlgorithmNames = {
    std::pair{Algorithm::corsort, std::string_view{"corsort"}},
    std::pair{Algorithm::quicksort, std::string_view{"quicksort"}},
    std::pair{Algorithm::asort, std::string_view{"asort"}},
    std::pair{Algorithm::mergesort_dfs, std::string_view{"mergesort_dfs"}},
    std::pair{Algorithm::mergesort_bfs, std::string_view{"mergesort_bfs"}},
    std::pair{Algorithm::heapsort, std::string_view{"heapsort"}},
    std::pair{Algorithm::ford_johnson, std::string_view{"ford_johnson"}},
};

constexpr std::array kEstimatorNames = {
    std::pair{Estimator::natural, std::string_view{"natural"}},
    std::pair{Estimator::rho, std::string_view{"rho"}},
    std::pair{Estimator::delta, std::string_view{"delta"}},
    std::pair{Estimator::none, std::string_view{"none"}},
};

Task<void> make_task(Algorithm algorithm, detail::SortContext& ctx) {
  switch (algorithm) {
    case Algorithm::corsort: return detail::corsort_task(ctx);
    case Algorithm::quicksort: return detail::quicksort_task(ctx);
    case Algorithm::asort: return detail::asort_task(ctx);
    case Algorithm::mergesort_dfs: return detail::mergesort_dfs_task(ctx);
    case Algorithm::mergesort_bfs: return detail::mergesort_bfs_task(ctx);
    case Algorithm::heapsort: return detail::heapsort_task(ctx);
    case Algorithm::ford_johnson: return detail::ford_johnson_task(ctx);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  for (const auto& [value, name] : kAlgorithmNames) {
    if (value == algorithm) return name;
  }
  return "unknown";
}

std::string_view to_string(Estimator estimator) {
  for (const auto& [value, name] : kEstimatorNames) {
    if (value == estimator) return name;
  }
  return "unknown";
}

std::string to_string(const SorterSpec& spec) {
  return std::string(to_string(spec.algorithm)) + ":" + std::string(to_string(spec.estimator));
}

Algorithm parse_algorithm(std::string_view text) {
  for (const auto& [value, name] : kAlgorithmNames) {
    if (name == text) return value;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

Estimator parse_estimator(std::string_view text) {
  for (const auto& [value, name] : kEstimatorNames) {
    if (name == text) return value;
  }
  throw std::invalid_argument("unknown estimator '" + std::string(text) + "'");
}

SorterSpec parse_sorter_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("sorter spec '" + std::string(text) +
                                "' must look like algorithm:estimator");
  }
  SorterSpec spec{parse_algorithm(text.substr(0, colon)), parse_estimator(text.substr(colon + 1))};
  validate(spec);
  return spec;
}

bool has_natural_estimate(Algorithm algorithm) {
  return algorithm == Algorithm::quicksort || algorithm == Algorithm::mergesort_dfs ||
         algorithm == Algorithm::heapsort;
}

void validate(const SorterSpec& spec) {
  if (spec.estimator == Estimator::natural && !has_natural_estimate(spec.algorithm)) {
    throw std::invalid_argument(std::string(to_string(spec.algorithm)) +
                                " has no natural estimate");
  }
}

std::vector<std::size_t> ranks_of(const HiddenList& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<std::size_t> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && values[order[r]] == values[order[r - 1]]) {
      throw DuplicateKeyError("hidden list contains duplicate values");
    }
    ranks[order[r]] = r;
  }
  return ranks;
}

struct AnytimeSorter::State {
  State(std::size_t n, ScoreKind kind) : ctx(n), scores(kind, n) {}

  detail::SortContext ctx;
  HiddenList values;
  bool track_estimates = true;
  ScoreEstimate scores;
  Estimate buffer;
  Estimate final_order;
  bool finished = false;

  bool track_tau = false;
  std::vector<std::size_t> ranks;
  std::uint64_t score_tau = 0;
  std::unique_ptr<TauTracker> tracker;
  std::vector<std::size_t> in_ranks;
};

AnytimeSorter::AnytimeSorter(SorterSpec spec, HiddenList values)
    : AnytimeSorter(spec, std::move(values), Options{}) {}

AnytimeSorter::AnytimeSorter(SorterSpec spec, HiddenList values, Options options) : spec_(spec) {
  validate(spec_);
  if (values.empty()) {
    throw std::invalid_argument("AnytimeSorter: input must be nonempty");
  }
  const std::size_t n = values.size();
  state_ = std::make_unique<State>(
      n, spec_.estimator == Estimator::delta ? ScoreKind::delta : ScoreKind::rho);
  state_->values = std::move(values);
  state_->track_estimates = options.track_estimates;
  if (options.track_estimates &&
      (spec_.estimator == Estimator::rho || spec_.estimator == Estimator::delta)) {
    state_->ctx.keep_order();
  }
  if (spec_.estimator == Estimator::none) {
    state_->buffer = state_->ctx.working();
  }
  if (options.track_tau) {
    if (!options.track_estimates) {
      throw std::invalid_argument("AnytimeSorter: tau tracking needs estimates");
    }
    state_->track_tau = true;
    state_->ranks = ranks_of(state_->values);
    state_->score_tau = kendall_tau(state_->ranks);
    state_->tracker = std::make_unique<TauTracker>(n);
    state_->in_ranks.resize(n);
  }
  state_->ctx.root = make_task(spec_.algorithm, state_->ctx);
  state_->ctx.root.start();
  if (state_->ctx.root.done()) {
    state_->ctx.root.result();
    state_->finished = true;
    state_->final_order = state_->ctx.working();
  }
}

AnytimeSorter::AnytimeSorter(AnytimeSorter&&) noexcept = default;
AnytimeSorter& AnytimeSorter::operator=(AnytimeSorter&&) noexcept = default;
AnytimeSorter::~AnytimeSorter() = default;

std::size_t AnytimeSorter::size() const { return state_->values.size(); }

bool AnytimeSorter::done() const { return state_->finished; }

std::size_t AnytimeSorter::comparisons() const { return state_->ctx.comparisons; }

std::optional<std::pair<std::size_t, std::size_t>> AnytimeSorter::pending() const {
  if (state_->finished) return std::nullopt;
  return std::pair{state_->ctx.pending_first(), state_->ctx.pending_second()};
}

Comparison AnytimeSorter::step() {
  State& s = *state_;
  if (s.finished) {
    throw std::logic_error("AnytimeSorter::step: the sort has already terminated");
  }
  const std::size_t i = s.ctx.pending_first();
  const std::size_t j = s.ctx.pending_second();
  if (i == j || s.values[i] == s.values[j]) {
    throw DuplicateKeyError("AnytimeSorter::step: indices " + std::to_string(i) + " and " +
                            std::to_string(j) + " hold equal values");
  }
  const Comparison outcome{i, j, s.values[i] < s.values[j]};
  if (PartialOrder* po = s.ctx.order()) {
    last_informative_ = po->record(outcome.smaller(), outcome.larger());
  }
  ++s.ctx.comparisons;
  s.ctx.resume_with(outcome.first_smaller);
  if (s.ctx.root.done()) {
    s.ctx.root.result();
    s.finished = true;
    s.final_order = s.ctx.working();
  }
  return outcome;
}

std::size_t AnytimeSorter::run_to_completion() {
  while (!done()) step();
  return comparisons();
}

const Estimate& AnytimeSorter::estimate() {
  State& s = *state_;
  if (s.finished) return s.final_order;
  if (!s.track_estimates) {
    throw std::logic_error("AnytimeSorter::estimate: estimates are not being tracked");
  }
  switch (spec_.estimator) {
    case Estimator::natural: {
      const std::vector<std::size_t>& w = s.ctx.working();
      const std::size_t reversed = s.ctx.reversed_prefix();
      s.buffer.assign(w.rbegin() + static_cast<std::ptrdiff_t>(w.size() - reversed), w.rend());
      s.buffer.insert(s.buffer.end(), w.begin() + static_cast<std::ptrdiff_t>(reversed), w.end());
      return s.buffer;
    }
    case Estimator::rho:
    case Estimator::delta:
      if (s.track_tau) return s.scores.refresh(*s.ctx.order(), s.ranks, s.score_tau);
      return s.scores.refresh(*s.ctx.order());
    case Estimator::none:
      return s.buffer;
  }
  return s.buffer;
}

std::uint64_t AnytimeSorter::tau() {
  State& s = *state_;
  if (!s.track_tau) {
    throw std::logic_error("AnytimeSorter::tau: tau tracking is off");
  }
  const Estimate& est = estimate();
  if (!s.finished && (spec_.estimator == Estimator::rho || spec_.estimator == Estimator::delta)) {
    return s.score_tau;
  }
  for (std::size_t p = 0; p < est.size(); ++p) s.in_ranks[p] = s.ranks[est[p]];
  return s.tracker->update(s.in_ranks);
}

const PartialOrder* AnytimeSorter::order() const { return state_->ctx.order(); }

const Estimate& AnytimeSorter::result() const {
  if (!state_->finished) {
    throw std::logic_error("AnytimeSorter::result: the sort has not terminated");
  }
  return state_->final_order;
}

ComparisonTrace run(const SorterSpec& spec, const HiddenList& input) {
  ComparisonTrace trace;
  trace.ranks = ranks_of(input);
  AnytimeSorter sorter(spec, input);
  while (!sorter.done()) {
    trace.steps.push_back(sorter.step());
    trace.estimates.push_back(sorter.estimate());
  }
  trace.total_comparisons = sorter.comparisons();
  trace.final_order = sorter.result();
  return trace;
}

std::size_t count_comparisons(Algorithm algorithm, const HiddenList& input) {
  const Estimator estimator = has_natural_estimate(algorithm) ? Estimator::natural : Estimator::rho;
  AnytimeSorter sorter({algorithm, estimator}, input, {.track_estimates = false});
  return sorter.run_to_completion();
}

ComparisonTrace corsort(const HiddenList& input) { return run({Algorithm::corsort, Estimator::rho}, input); }
ComparisonTrace quicksort_anytime(const HiddenList& input) {
  return run({Algorithm::quicksort, Estimator::natural}, input);
}
ComparisonTrace asort(const HiddenList& input) { return run({Algorithm::asort, Estimator::rho}, input); }
ComparisonTrace mergesort_dfs(const HiddenList& input) {
  return run({Algorithm::mergesort_dfs, Estimator::natural}, input);
}
ComparisonTrace mergesort_bfs(const HiddenList& input) {
  return run({Algorithm::mergesort_bfs, Estimator::rho}, input);
}
ComparisonTrace heapsort_anytime(const HiddenList& input) {
  return run({Algorithm::heapsort, Estimator::natural}, input);
}
ComparisonTrace ford_johnson(const HiddenList& input) {
  return run({Algorithm::ford_johnson, Estimator::rho}, input);
}

}  // namespace anysort
