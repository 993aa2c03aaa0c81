#pragma once

#include <cstdint>
#include <random>

namespace hibound::detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent seed from a base seed and a stream of labels.
template <class... Labels>
std::uint64_t mix_seed(std::uint64_t seed, Labels... labels) {
  std::uint64_t h = splitmix64(seed);
  ((h = splitmix64(h ^ static_cast<std::uint64_t>(labels))), ...);
  return h;
}

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). The standard distributions are
/// implementation-defined, so sampling is done here to keep output identical
/// across standard libraries.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <class It>
void shuffle(It first, It last, Rng& rng) {
  const auto n = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = n; i > 1; --i) {
    std::uint64_t j = uniform_below(rng, i);
    std::swap(first[i - 1], first[j]);
  }
}

}  // namespace hibound::detail
