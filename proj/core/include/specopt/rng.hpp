#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

namespace specopt {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t mix64(std::uint64_t z);

/// Substream seed: mix64(seed ^ mix64(index + golden gamma)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Counter-based 64-bit generator. The i-th output (i = 1, 2, ...) is
/// mix64(key + i * 0x9E3779B97F4A7C15), so a stream is fully described by
/// (key, counter). Normals come from the Box-Muller transform; uniform indices
/// from Lemire's multiply-and-reject method. None of the std distributions are
/// used, so streams are reproducible across standard libraries.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) : key_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();

  /// Standard normal.
  double normal();

  /// Uniform on {0, ..., n - 1}; n must be positive.
  std::size_t uniform_index(std::size_t n);

  /// Independent stream keyed by derive_seed(key, index).
  CounterRng substream(std::uint64_t index) const { return CounterRng(derive_seed(key_, index)); }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace specopt
