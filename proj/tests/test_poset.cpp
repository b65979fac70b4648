#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "anysort/poset.hpp"
#include "doctest.h"
#include "oracles.hpp"

using anysort::PartialOrder;

namespace {

void check_invariants(const PartialOrder& po) {
  const std::size_t n = po.size();
  std::size_t relations = 0;
  bool all_full = true;
  for (std::size_t i = 0; i < n; ++i) {
    REQUIRE(po.leq(i, i));
    std::uint32_t d = 0, a = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (po.leq(j, i)) ++d;
      if (po.leq(i, j)) ++a;
      if (i != j && po.leq(i, j)) {
        ++relations;
        REQUIRE_FALSE(po.leq(j, i));
        for (std::size_t k = 0; k < n; ++k)
          if (po.leq(j, k)) REQUIRE(po.leq(i, k));
      }
    }
    REQUIRE(po.descendants(i) == d);
    REQUIRE(po.ancestors(i) == a);
    if (d + a != n + 1) all_full = false;
  }
  REQUIRE(po.relation_count() == relations);
  REQUIRE(po.is_total() == po.incomparable_pairs().empty());
  REQUIRE(po.is_total() == all_full);
}

}  // namespace

TEST_CASE("fresh orders are antichains") {
  PartialOrder one(1);
  CHECK(one.is_total());
  CHECK(one.sorted_order() == std::vector<std::size_t>{0});

  PartialOrder three(3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(three.descendants(i) == 1);
    CHECK(three.ancestors(i) == 1);
  }
  using P = std::vector<std::pair<std::size_t, std::size_t>>;
  CHECK(three.incomparable_pairs() == P{{0, 1}, {0, 2}, {1, 2}});
  CHECK(three.leq(0, 0));
  CHECK_FALSE(three.leq(0, 1));
  CHECK(PartialOrder(2).incomparable_pairs() == P{{0, 1}});
  CHECK_FALSE(PartialOrder(2).is_total());
}

TEST_CASE("record closes transitively") {
  using P = std::vector<std::pair<std::size_t, std::size_t>>;
  PartialOrder po(3);
  CHECK(po.record(0, 1));
  CHECK(po.descendants(0) == 1);
  CHECK(po.descendants(1) == 2);
  CHECK(po.descendants(2) == 1);
  CHECK(po.ancestors(0) == 2);
  CHECK(po.ancestors(1) == 1);
  CHECK(po.ancestors(2) == 1);
  CHECK(po.incomparable_pairs() == P{{0, 2}, {1, 2}});

  CHECK(po.record(1, 2));
  CHECK(po.leq(0, 2));
  CHECK(po.descendants(2) == 3);
  CHECK(po.ancestors(0) == 3);
  CHECK(po.is_total());
  CHECK(po.incomparable_pairs().empty());
  CHECK(po.sorted_order() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("repeating a comparison is a no-op") {
  PartialOrder po(3);
  po.record(0, 1);
  CHECK_FALSE(po.record(0, 1));
  CHECK(po.relation_count() == 1);
  CHECK(po.descendants(1) == 2);
}

TEST_CASE("sorted_order reads off the chain") {
  PartialOrder po(3);
  po.record(2, 0);
  po.record(0, 1);
  CHECK(po.sorted_order() == std::vector<std::size_t>{2, 0, 1});

  PartialOrder four(4);
  four.record(0, 1);
  four.record(1, 2);
  four.record(2, 3);
  CHECK(four.is_total());
  CHECK(four.relation_count() == 6);
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(PartialOrder(0), std::invalid_argument);
  PartialOrder po(3);
  CHECK_THROWS_AS(po.record(0, 3), std::out_of_range);
  CHECK_THROWS_AS(po.record(1, 1), std::invalid_argument);
  po.record(0, 1);
  po.record(1, 2);
  CHECK_THROWS_AS(po.record(2, 0), anysort::ContradictionError);
  CHECK_THROWS_AS(po.record(1, 0), anysort::ContradictionError);
  CHECK_THROWS_AS(PartialOrder(2).sorted_order(), std::logic_error);
}

TEST_CASE("closure matches a Floyd-Warshall oracle") {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 32;
    if (n < 2) continue;
    const auto edges = oracle::random_dag_edges(n, rng() % (2 * n + 1), rng);
    PartialOrder po(n);
    std::vector<std::pair<std::size_t, std::size_t>> prefix;
    for (auto [lo, hi] : edges) {
      po.record(lo, hi);
      prefix.emplace_back(lo, hi);
      const oracle::Matrix reach = oracle::closure(n, prefix);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) REQUIRE(po.leq(i, j) == reach[i][j]);
    }
  }
}

TEST_CASE("invariants and monotonicity under random records") {
  std::mt19937_64 rng(2);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + rng() % 63;
    const auto edges = oracle::random_dag_edges(n, rng() % (3 * n), rng);
    PartialOrder po(n);
    check_invariants(po);
    for (auto [lo, hi] : edges) {
      const std::vector<std::uint32_t> d0(po.descendant_counts().begin(), po.descendant_counts().end());
      const std::vector<std::uint32_t> a0(po.ancestor_counts().begin(), po.ancestor_counts().end());
      const std::size_t r0 = po.relation_count();
      const bool changed = po.record(lo, hi);
      REQUIRE(po.relation_count() >= r0);
      REQUIRE(changed == (po.relation_count() > r0));
      for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(po.descendants(i) >= d0[i]);
        REQUIRE(po.ancestors(i) >= a0[i]);
      }
      check_invariants(po);
    }
  }
}

TEST_CASE("full chain on more than one word") {
  const std::size_t n = 130;
  std::mt19937_64 rng(3);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  PartialOrder po(n);
  for (std::size_t k = 0; k + 1 < n; ++k) po.record(perm[k], perm[k + 1]);
  CHECK(po.is_total());
  CHECK(po.sorted_order() == perm);
  check_invariants(po);
}
