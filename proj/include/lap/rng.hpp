#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace lap {

// splitmix64, used to derive independent stream seeds from (seed, index...)
// so parallel workers get decorrelated generators deterministically.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a) {
  return splitmix64(seed ^ splitmix64(a + 1));
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return mix_seed(mix_seed(seed, a), b);
}

using Rng = std::mt19937_64;

// Bounded draw and shuffle are spelled out rather than taken from <random>
// distributions, whose outputs are implementation-defined.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

inline double rng_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double rng_range(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng_unit(rng);
}

template <typename T>
void rng_shuffle(std::vector<T>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

// Draw k distinct indices from [0, n) by partial Fisher-Yates.
std::vector<int> sample_without_replacement(Rng& rng, int n, int k);

}  // namespace lap
