#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "anysort/estimators.hpp"
#include "anysort/metrics.hpp"
#include "doctest.h"
#include "oracles.hpp"

using anysort::Estimate;
using anysort::PartialOrder;

namespace {

PartialOrder chain3() {
  PartialOrder po(3);
  po.record(0, 1);
  po.record(1, 2);
  return po;
}

PartialOrder vee() {
  PartialOrder po(3);
  po.record(0, 1);
  po.record(0, 2);
  return po;
}

}  // namespace

TEST_CASE("score vectors") {
  PartialOrder fresh(3);
  CHECK(anysort::rho_scores(fresh) == std::vector<double>{0.5, 0.5, 0.5});
  CHECK(anysort::delta_scores(fresh) == std::vector<std::int64_t>{0, 0, 0});
  CHECK(anysort::info_scores(fresh) == std::vector<std::int64_t>{2, 2, 2});

  PartialOrder two(2);
  two.record(0, 1);
  CHECK(anysort::rho_scores(two)[0] == doctest::Approx(1.0 / 3));
  CHECK(anysort::rho_scores(two)[1] == doctest::Approx(2.0 / 3));
  CHECK(anysort::delta_scores(two) == std::vector<std::int64_t>{-1, 1});

  const PartialOrder chain = chain3();
  CHECK(anysort::rho_scores(chain) == std::vector<double>{0.25, 0.5, 0.75});
  CHECK(anysort::delta_scores(chain) == std::vector<std::int64_t>{-2, 0, 2});
  CHECK(anysort::info_scores(chain) == std::vector<std::int64_t>{4, 4, 4});

  PartialOrder four(4);
  four.record(0, 1);
  CHECK(anysort::info_scores(four) == std::vector<std::int64_t>{3, 3, 2, 2});
}

TEST_CASE("estimate_from_scores sorts with index tie-break") {
  CHECK(anysort::estimate_from_scores(std::vector<double>{0.5, 0.5, 0.5}) == Estimate{0, 1, 2});
  CHECK(anysort::estimate_from_scores(std::vector<double>{2.0 / 3, 1.0 / 3}) == Estimate{1, 0});
  CHECK(anysort::estimate_from_scores(std::vector<double>{0.75, 0.25, 0.5}) == Estimate{1, 2, 0});
}

TEST_CASE("linear extensions and average heights") {
  CHECK(anysort::linear_extensions(PartialOrder(3)).size() == 6);
  CHECK(anysort::linear_extensions(chain3()) == std::vector<Estimate>{{0, 1, 2}});
  CHECK(anysort::linear_extensions(vee()) == std::vector<Estimate>{{0, 1, 2}, {0, 2, 1}});

  CHECK(anysort::exact_average_heights(chain3()) == std::vector<double>{0, 1, 2});
  CHECK(anysort::exact_average_heights(PartialOrder(2)) == std::vector<double>{0.5, 0.5});
  CHECK(anysort::exact_average_heights(vee()) == std::vector<double>{0, 1.5, 1.5});
}

TEST_CASE("enumeration refuses large inputs") {
  CHECK_THROWS_AS(anysort::linear_extensions(PartialOrder(13)), anysort::EnumerationLimitError);
  CHECK_THROWS_AS(anysort::linear_extensions(PartialOrder(9), {.max_elements = 12, .max_extensions = 1000}),
                  anysort::EnumerationLimitError);
  CHECK_THROWS_AS(anysort::exact_average_heights(PartialOrder(13)), anysort::EnumerationLimitError);
}

TEST_CASE("enumeration matches next_permutation oracle") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 1 + rng() % 8;
    const PartialOrder po = oracle::random_prefix_order(n, rng);
    REQUIRE(anysort::linear_extensions(po) == oracle::extensions(po));
    const auto heights = anysort::exact_average_heights(po);
    const auto expected = oracle::average_heights(po);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(heights[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("score estimates are linear extensions") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 1 + rng() % 8;
    const PartialOrder po = oracle::random_prefix_order(n, rng);
    const auto ext = oracle::extensions(po);
    const std::set<Estimate> members(ext.begin(), ext.end());
    const Estimate rho = anysort::rho_estimate(po);
    REQUIRE(members.count(rho) == 1);
    REQUIRE(members.count(anysort::delta_estimate(po)) == 1);
    REQUIRE(rho == anysort::estimate_from_scores(anysort::rho_scores(po)));
    REQUIRE(anysort::delta_estimate(po) == anysort::estimate_from_scores(anysort::delta_scores(po)));
  }
}

TEST_CASE("total orders give the sorted order under every score") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 2 + rng() % 40;
    Estimate perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    PartialOrder po(n);
    for (std::size_t k = 0; k + 1 < n; ++k) po.record(perm[k], perm[k + 1]);
    CHECK(anysort::rho_estimate(po) == perm);
    CHECK(anysort::delta_estimate(po) == perm);
    if (n <= 8) CHECK(anysort::estimate_from_scores(anysort::exact_average_heights(po)) == perm);
  }
}

TEST_CASE("incremental score estimate tracks the full re-sort and tau") {
  std::mt19937_64 rng(14);
  for (auto kind : {anysort::ScoreKind::rho, anysort::ScoreKind::delta}) {
    for (int round = 0; round < 20; ++round) {
      const std::size_t n = 2 + rng() % 60;
      std::vector<std::size_t> value(n);
      std::iota(value.begin(), value.end(), std::size_t{0});
      std::shuffle(value.begin(), value.end(), rng);
      PartialOrder po(n);
      anysort::ScoreEstimate plain(kind, n);
      anysort::ScoreEstimate tracked(kind, n);
      std::uint64_t tau = anysort::kendall_tau(value);
      for (int k = 0; k < 200 && !po.is_total(); ++k) {
        const std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        if (value[i] < value[j]) po.record(i, j);
        else po.record(j, i);
        const Estimate full =
            kind == anysort::ScoreKind::rho ? anysort::rho_estimate(po) : anysort::delta_estimate(po);
        REQUIRE(plain.refresh(po) == full);
        REQUIRE(tracked.refresh(po, value, tau) == full);
        std::vector<std::size_t> ranks(n);
        for (std::size_t p = 0; p < n; ++p) ranks[p] = value[full[p]];
        REQUIRE(tau == anysort::kendall_tau(ranks));
      }
    }
  }
}
