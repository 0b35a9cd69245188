#include "specopt/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace specopt {
namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// Full 128-bit product a * b; returns the low word and stores the high word.
std::uint64_t mul_wide(std::uint64_t a, std::uint64_t b, std::uint64_t& hi) {
  const std::uint64_t a_lo = a & 0xFFFFFFFFULL, a_hi = a >> 32;
  const std::uint64_t b_lo = b & 0xFFFFFFFFULL, b_hi = b >> 32;
  const std::uint64_t ll = a_lo * b_lo;
  const std::uint64_t lh = a_lo * b_hi;
  const std::uint64_t hl = a_hi * b_lo;
  const std::uint64_t hh = a_hi * b_hi;
  const std::uint64_t mid = (ll >> 32) + (lh & 0xFFFFFFFFULL) + (hl & 0xFFFFFFFFULL);
  hi = hh + (lh >> 32) + (hl >> 32) + (mid >> 32);
  return (mid << 32) | (ll & 0xFFFFFFFFULL);
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index + kGamma));
}

CounterRng::result_type CounterRng::operator()() {
  ++counter_;
  return mix64(key_ + counter_ * kGamma);
}

double CounterRng::uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double CounterRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_normal_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::size_t CounterRng::uniform_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: empty range");
  const auto range = static_cast<std::uint64_t>(n);
  std::uint64_t hi = 0;
  std::uint64_t lo = mul_wide((*this)(), range, hi);
  if (lo < range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (lo < threshold) lo = mul_wide((*this)(), range, hi);
  }
  return static_cast<std::size_t>(hi);
}

}  // namespace specopt
