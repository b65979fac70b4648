#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "anysort/metrics.hpp"
#include "doctest.h"
#include "oracles.hpp"

namespace {

std::vector<std::size_t> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("kendall tau examples") {
  using V = std::vector<std::size_t>;
  CHECK(anysort::kendall_tau(V{0, 1, 2, 3}) == 0);
  CHECK(anysort::kendall_tau(V{3, 2, 1, 0}) == 6);
  CHECK(anysort::kendall_tau(V{1, 0, 3, 2}) == 2);
  CHECK(anysort::normalized_tau(V{0, 1, 2, 3}) == 0.0);
  CHECK(anysort::normalized_tau(V{3, 2, 1, 0}) == 1.0);
  CHECK(anysort::normalized_tau(V{1, 0, 3, 2}) == doctest::Approx(2.0 / 6));
  CHECK_THROWS_AS(anysort::kendall_tau(V{0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(anysort::kendall_tau(V{0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(anysort::normalized_tau(V{0}), std::invalid_argument);
}

TEST_CASE("kendall tau matches the pair count and reversal identity") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 2000; ++round) {
    const std::size_t n = 1 + rng() % 256;
    auto p = random_perm(n, rng);
    const std::uint64_t t = anysort::kendall_tau(p);
    REQUIRE(t == oracle::inversions(p));
    std::reverse(p.begin(), p.end());
    REQUIRE(t + anysort::kendall_tau(p) == n * (n - 1) / 2);
  }
}

TEST_CASE("tau tracker follows arbitrary edits") {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 1 + rng() % 100;
    auto p = random_perm(n, rng);
    anysort::TauTracker tracker(n);
    REQUIRE(tracker.update(p) == oracle::inversions(p));
    for (int k = 0; k < 50; ++k) {
      const std::size_t a = rng() % n, b = rng() % n;
      std::rotate(p.begin() + std::min(a, b), p.begin() + std::min(a, b) + (std::max(a, b) > std::min(a, b)),
                  p.begin() + std::max(a, b) + 1);
      REQUIRE(tracker.update(p) == oracle::inversions(p));
    }
  }
}

TEST_CASE("itlb and overhead") {
  CHECK(anysort::itlb(8) == doctest::Approx(15.284).epsilon(1e-4));
  CHECK(anysort::itlb(1024) == doctest::Approx(8769.0).epsilon(1e-4));
  CHECK(anysort::relative_overhead(16, 8) == doctest::Approx(4.683).epsilon(1e-3));
  CHECK(anysort::relative_overhead(14, 8) == doctest::Approx(-8.40).epsilon(1e-3));
  const double rounded = std::round(anysort::itlb(1000));
  CHECK(std::abs(anysort::relative_overhead(static_cast<std::size_t>(rounded), 1000)) < 0.01);
  double previous = anysort::itlb(2);
  for (std::size_t n = 2; n < 5000; ++n) {
    const double v = anysort::itlb(n);
    REQUIRE(v < static_cast<double>(n) * std::log2(static_cast<double>(n)));
    if (n > 2) REQUIRE(v > previous);
    previous = v;
  }
}

TEST_CASE("quantile convention") {
  std::vector<double> x(10'000);
  std::iota(x.begin(), x.end(), 0.0);
  CHECK(anysort::quantile_sorted(x, 0.5) == 4999.5);
  CHECK(anysort::quantile_sorted(x, 0.0) == 0.0);
  CHECK(anysort::quantile_sorted(x, 1.0) == 9999.0);

  const std::vector<double> two{1.0, 3.0};
  CHECK(anysort::quantile_sorted(two, 0.5) == 2.0);
  CHECK(anysort::quantile_sorted(two, 0.25) == 1.5);

  std::vector<std::vector<double>> series;
  for (int v = 0; v < 10'000; ++v) series.push_back({static_cast<double>(v), static_cast<double>(v)});
  const auto levels = anysort::default_quantile_levels();
  const auto bands = anysort::quantile_bands(series, levels);
  CHECK(bands.values.size() == 2);
  CHECK(bands.values[0][2] == 4999.5);
}

TEST_CASE("quantile bands edge cases") {
  const auto levels = anysort::default_quantile_levels();
  const std::vector<std::vector<double>> same(7, std::vector<double>{0.9, 0.4, 0.0});
  const auto bands = anysort::quantile_bands(same, levels);
  for (std::size_t s = 0; s < 3; ++s)
    for (double v : bands.values[s]) CHECK(v == same[0][s]);

  const std::vector<std::vector<double>> pair{{0.2, 1.0}, {0.6, 3.0}};
  const auto mid = anysort::quantile_bands(pair, std::vector<double>{0.5});
  CHECK(mid.values[0][0] == doctest::Approx(0.4));
  CHECK(mid.values[1][0] == 2.0);

  CHECK_THROWS(anysort::quantile_bands(std::vector<std::vector<double>>{}, levels));
  CHECK_THROWS(anysort::quantile_bands(std::vector<std::vector<double>>{{1.0}, {1.0, 2.0}}, levels));
}

TEST_CASE("quantile bands are monotone in the level") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto levels = anysort::default_quantile_levels();
  for (int round = 0; round < 100; ++round) {
    const std::size_t count = 1 + rng() % 50, steps = 1 + rng() % 20;
    std::vector<std::vector<double>> series(count, std::vector<double>(steps));
    for (auto& s : series)
      for (double& v : s) v = u(rng);
    const auto bands = anysort::quantile_bands(series, levels);
    for (const auto& row : bands.values) REQUIRE(std::is_sorted(row.begin(), row.end()));
  }
}

TEST_CASE("profile pads with zeros and matches per-snapshot tau") {
  const auto single = anysort::run({anysort::Algorithm::corsort, anysort::Estimator::rho}, {42});
  const auto flat = anysort::profile(single, 5);
  CHECK(flat.tau_by_step == std::vector<std::uint64_t>(5, 0));

  std::mt19937_64 rng(24);
  for (auto spec : {anysort::SorterSpec{anysort::Algorithm::quicksort, anysort::Estimator::natural},
                    anysort::SorterSpec{anysort::Algorithm::corsort, anysort::Estimator::rho},
                    anysort::SorterSpec{anysort::Algorithm::heapsort, anysort::Estimator::natural}}) {
    const auto perm = random_perm(20, rng);
    const anysort::HiddenList input(perm.begin(), perm.end());
    const auto trace = anysort::run(spec, input);
    const std::size_t horizon = trace.total_comparisons + 10;
    const auto prof = anysort::profile(trace, horizon);
    REQUIRE(prof.tau_by_step.size() == horizon);
    for (std::size_t k = 0; k < trace.total_comparisons; ++k) {
      std::vector<std::size_t> r(20);
      for (std::size_t p = 0; p < 20; ++p) r[p] = trace.ranks[trace.estimates[k][p]];
      REQUIRE(prof.tau_by_step[k] == oracle::inversions(r));
    }
    for (std::size_t k = trace.total_comparisons; k < horizon; ++k) REQUIRE(prof.tau_by_step[k] == 0);
    CHECK_THROWS(anysort::profile(trace, trace.total_comparisons - 1));
  }
}
