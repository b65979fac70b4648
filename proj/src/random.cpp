#include "anysort/random.hpp"

#include <numeric>
#include <utility>

namespace anysort {

HiddenList generate_permutation(std::uint64_t seed, std::uint64_t trial, std::size_t n) {
  HiddenList values(n);
  std::iota(values.begin(), values.end(), Key{0});
  TrialRng rng(seed, trial);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(values[i - 1], values[j]);
  }
  return values;
}

}  // namespace anysort
