#ifndef PGROWTH_RNG_HPP
#define PGROWTH_RNG_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace pgrowth {

/// SplitMix64 (Steele/Lea/Vigna). A 64-bit counter-based generator: state
/// advances by the golden-ratio increment 0x9E3779B97F4A7C15 and each output
/// is a fixed-point mix of the state. Chosen because the whole algorithm fits
/// in five lines and is reproducible across languages and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, n) by rejection. n must be nonzero.
  std::uint64_t below(std::uint64_t n) {
    // Accept only values under the largest multiple of n representable in
    // 64 bits, so every residue is equally likely.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
    std::uint64_t x = next();
    while (x > limit) x = next();
    return x % n;
  }

 private:
  std::uint64_t state_;
};

/// The (index+1)-th raw output of SplitMix64 seeded with `seed`. Used to give
/// every trial of a batch its own independent, reproducible sub-stream.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed + index * 0x9E3779B97F4A7C15ULL).next();
}

/// First `size` entries of a seeded Fisher-Yates shuffle of [0, universe):
/// a uniform sample without replacement. Returned ascending.
inline std::vector<std::uint32_t> sample_without_replacement(
    SplitMix64& rng, std::uint32_t universe, std::uint32_t size) {
  std::vector<std::uint32_t> ids(universe);
  std::iota(ids.begin(), ids.end(), 0u);
  for (std::uint32_t i = 0; i < size && i + 1 < universe; ++i) {
    const std::uint64_t j = i + rng.below(universe - i);
    std::swap(ids[i], ids[j]);
  }
  ids.resize(size);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace pgrowth

#endif  // PGROWTH_RNG_HPP
