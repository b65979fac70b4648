#pragma once

#include <cstdint>
#include <random>

#include "anysort/sorters.hpp"

namespace anysort {

/// SplitMix64 finalizer, used to derive independent per-trial seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Per-trial generator: std::mt19937_64 (whose output sequence is fixed by
/// the standard) seeded with splitmix64(seed ^ splitmix64(trial)).
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial) : engine_(splitmix64(seed ^ splitmix64(trial))) {}

  /// Uniform integer in [0, bound) by rejection, so the result is the same on
  /// every standard library. bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform permutation of 0..n-1 by Fisher-Yates, keyed on (seed, trial).
HiddenList generate_permutation(std::uint64_t seed, std::uint64_t trial, std::size_t n);

}  // namespace anysort
