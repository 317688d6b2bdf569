#pragma once

#include <cmath>
#include <cstdint>

namespace anharmonic {

/**
 * Counter-based generator: value i of stream `seed` is a pure function of
 * (seed, i), so sample partitions across workers cannot change the result.
 * SplitMix64 finalizer over the keyed counter.
 */
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t index) const {
    std::uint64_t x = seed_ + 0x9E3779B97F4A7C15ull * (index + 1);
    x ^= x >> 30; x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27; x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
  }

  /// Uniform in (0, 1].
  double uniform(std::uint64_t index) const {
    return (static_cast<double>(bits(index) >> 11) + 1.0) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller on counters (2 index, 2 index + 1).
  double normal(std::uint64_t index) const {
    double u1 = uniform(2 * index);
    double u2 = uniform(2 * index + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

 private:
  std::uint64_t seed_;
};

}  // namespace anharmonic
