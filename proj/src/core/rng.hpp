#pragma once

#include <cstdint>

namespace levysim {

// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Counter-based generator: draw n of stream `key` is mix64(key + n*kGolden).
// The output sequence depends only on (key, draw index), never on thread
// scheduling. for_trajectory() composes bijections of the trajectory index,
// so distinct indices under one master seed can never share a stream.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

  static CounterRng for_trajectory(std::uint64_t master_seed,
                                   std::uint64_t trajectory_index) noexcept {
    return CounterRng(mix64(master_seed ^ mix64(trajectory_index * kGolden + 1)));
  }

  std::uint64_t next_u64() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
  }

  // Uniform on [0,1), 53 bits.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace levysim
