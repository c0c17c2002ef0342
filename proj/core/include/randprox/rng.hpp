#pragma once

#include <cstdint>

namespace randprox {

// splitmix64: a 64-bit counter generator with a full-avalanche output mix
// (Steele, Lea & Flood's SplittableRandom finalizer). Chosen because the
// sequence is defined by the code below alone, with no implementation-defined
// behavior, so traces are reproducible across platforms and standard
// libraries. Independent streams are derived by hashing (seed, stream id)
// through the same finalizer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t stream_id) {
    return SplitMix64(finalize(seed) ^ finalize(~stream_id));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return finalize(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double next_double(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(next_double() * static_cast<double>(n));
  }

  static const char* algorithm_name() { return "splitmix64"; }

 private:
  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace randprox
