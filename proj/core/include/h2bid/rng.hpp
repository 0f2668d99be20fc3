// rng.hpp - deterministic seed derivation and unbiased index draws
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace h2bid {

/// Derives an independent stream seed from a base seed and a stream index
/// (splitmix64 finalizer). Identical inputs give identical seeds on every
/// platform, which is what makes parallel and serial backtests agree.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Unbiased draw from [0, n) by rejection. mt19937_64 output is fully
/// specified by the standard, so results are reproducible across compilers
/// (std::uniform_int_distribution is not).
inline std::uint64_t uniform_index(std::mt19937_64& gen, std::uint64_t n) {
  const std::uint64_t rem = std::numeric_limits<std::uint64_t>::max() % n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;
  std::uint64_t x = gen();
  while (x >= limit) x = gen();
  return x % n;
}

/// Draws `count` distinct indices uniformly from [0, n) via a partial
/// Fisher-Yates shuffle. Requires count <= n.
inline std::vector<std::size_t> sample_without_replacement(std::mt19937_64& gen,
                                                           std::size_t n,
                                                           std::size_t count) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_index(gen, n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  return idx;
}

}  // namespace h2bid
