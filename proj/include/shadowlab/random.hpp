#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace shadowlab {

namespace detail {

// SplitMix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace detail

/// Replayable identity of a random sequence. The same (seed, stream_id)
/// pair yields the same draws on every platform and every run; distinct
/// stream ids under one seed give decorrelated sequences.
struct RandomStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  /// Derived stream for chunk/row `index`. Stable under nesting: children
  /// of different parents never share an id by construction (hash chain).
  [[nodiscard]] constexpr RandomStream substream(std::uint64_t index) const {
    const std::uint64_t child = detail::mix64(
        detail::mix64(stream_id + detail::kGolden) ^ (index + 0xD1B54A32D192ED03ULL));
    return {seed, child};
  }
};

/// xoshiro256++ with SplitMix64 state expansion. Hand-rolled so the bit
/// stream does not depend on any standard-library implementation detail.
class RandomEngine {
 public:
  explicit constexpr RandomEngine(RandomStream stream) {
    std::uint64_t key = stream.seed ^ detail::mix64(stream.stream_id + detail::kGolden);
    for (auto& word : state_) {
      key += detail::kGolden;
      word = detail::mix64(key);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[3] = detail::kGolden;
  }

  constexpr std::uint64_t next_u64() {
    const std::uint64_t result = detail::rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl(state_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53-bit resolution.
  constexpr double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal deviate. Box-Muller; the second value of each pair is
  /// cached, so one engine draws pairs of uniforms on every other call.
  double next_normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double u1 = 1.0 - next_unit();  // (0, 1], keeps the log finite
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = two_pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::array<std::uint64_t, 4> state_{};
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace shadowlab
