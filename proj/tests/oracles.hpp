#pragma once

// Brute-force reference implementations. Each is written from the definition
// and shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "anysort/poset.hpp"

namespace oracle {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
using Matrix = std::vector<std::vector<bool>>;

inline std::uint64_t inversions(const std::vector<std::size_t>& r) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (r[i] > r[j]) ++count;
  return count;
}

// Reflexive-transitive closure by Floyd-Warshall.
inline Matrix closure(std::size_t n, const Edges& edges) {
  Matrix r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (auto [lo, hi] : edges) r[lo][hi] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Random edges consistent with a hidden random permutation.
inline Edges random_dag_edges(std::size_t n, std::size_t count, std::mt19937_64& rng) {
  const auto rank = random_permutation(n, rng);
  Edges edges;
  while (edges.size() < count) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    if (rank[i] > rank[j]) std::swap(i, j);
    edges.emplace_back(i, j);
  }
  return edges;
}

// Outcomes of comparing random pairs of a hidden permutation.
inline anysort::PartialOrder random_prefix_order(std::size_t n, std::mt19937_64& rng) {
  const auto value = random_permutation(n, rng);
  anysort::PartialOrder po(n);
  const std::size_t steps = n < 2 ? 0 : rng() % (n * (n - 1) / 2 + 1);
  for (std::size_t k = 0; k < steps; ++k) {
    const std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    if (value[i] < value[j]) po.record(i, j);
    else po.record(j, i);
  }
  return po;
}

// Every permutation of 0..n-1 respecting po, in lexicographic order.
inline std::vector<std::vector<std::size_t>> extensions(const anysort::PartialOrder& po) {
  std::vector<std::size_t> p(po.size());
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t x = 0; x < p.size() && ok; ++x)
      for (std::size_t y = x + 1; y < p.size() && ok; ++y)
        if (po.leq(p[y], p[x])) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<double> average_heights(const anysort::PartialOrder& po) {
  const auto ext = extensions(po);
  std::vector<double> h(po.size(), 0.0);
  for (const auto& e : ext)
    for (std::size_t pos = 0; pos < e.size(); ++pos) h[e[pos]] += static_cast<double>(pos);
  for (double& v : h) v /= static_cast<double>(ext.size());
  return h;
}

}  // namespace oracle
