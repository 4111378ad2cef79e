#pragma once

#include <cstdint>

namespace mirrorborn {

/// Deterministic 64-bit generator (splitmix64). The state advances by a fixed
/// additive constant per draw, so jumping ahead k draws is a single multiply;
/// discard() and the sharded sampling entry points rely on that.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53 random bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Skip k draws in O(1).
  void discard(std::uint64_t k) { state_ += k * kGamma; }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

/// Seed for an independent named stream of a root seed. Streams with distinct
/// salts start from unrelated points of the splitmix sequence.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 g(seed ^ (salt * SplitMix64::kGamma));
  return g.next_u64();
}

}  // namespace mirrorborn
