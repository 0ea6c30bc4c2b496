#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dqc1 {

/// SplitMix64 finalizer. Used to spread user seeds over the engine state
/// space and to derive independent per-trial / per-shard seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic seed derivation: seeds derived from the same (master, a, b)
/// agree everywhere, and distinct indices give independent streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0) {
  return mix64(mix64(mix64(master) ^ a) ^ b);
}

/// The one random engine used throughout: std::mt19937_64 is fully specified
/// by the standard, so identical seeds give identical streams on every
/// platform. All draws below go through explicit, documented algorithms
/// rather than std::*_distribution, whose mappings are implementation-defined.
using RandomEngine = std::mt19937_64;

inline RandomEngine make_engine(std::uint64_t seed) {
  return RandomEngine(mix64(seed));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_double(RandomEngine& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unbiased uniform integer in [0, n) by rejection (Lemire's method).
inline std::uint64_t bounded_uniform(RandomEngine& rng, std::uint64_t n) {
  using u128 = unsigned __int128;
  std::uint64_t x = rng();
  u128 m = static_cast<u128>(x) * n;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < n) {
    std::uint64_t threshold = -n % n;
    while (lo < threshold) {
      x = rng();
      m = static_cast<u128>(x) * n;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

/// Fisher-Yates shuffle driven by bounded_uniform, back to front.
template <typename T>
void fisher_yates_shuffle(std::vector<T>& v, RandomEngine& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(bounded_uniform(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

/// Exact Binomial(n, q) draw.
std::int64_t binomial_draw(RandomEngine& rng, std::int64_t n, double q);

}  // namespace dqc1
