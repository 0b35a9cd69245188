#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace specopt {

/// One-sided derivatives with magnitude at or above this are promoted to +/-inf.
inline constexpr double kInfinityThreshold = 1e12;

/// Element of R u {-inf, +inf}. NaN is not representable.
class ExtendedReal {
 public:
  enum class Kind { kFinite, kPosInf, kNegInf };

  constexpr ExtendedReal() = default;

  /// Throws std::invalid_argument on NaN. IEEE infinities map to the infinite kinds.
  explicit ExtendedReal(double v);

  static constexpr ExtendedReal pos_inf() { return ExtendedReal(Kind::kPosInf); }
  static constexpr ExtendedReal neg_inf() { return ExtendedReal(Kind::kNegInf); }

  /// Like the constructor, but |v| >= kInfinityThreshold becomes +/-inf.
  static ExtendedReal promoted(double v, double threshold = kInfinityThreshold);

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::kNegInf; }

  /// Finite value, or +/-HUGE_VAL for the infinite kinds.
  double to_double() const;

  /// Throws std::domain_error if not finite.
  double finite_value() const;

  ExtendedReal operator-() const;

  /// Scales by a positive finite factor.
  ExtendedReal scaled(double positive) const;

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::kFinite || a.value_ == b.value_);
  }
  friend std::partial_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b) {
    return a.to_double() <=> b.to_double();
  }

  std::string to_string() const;

 private:
  constexpr explicit ExtendedReal(Kind k) : kind_(k) {}

  Kind kind_ = Kind::kFinite;
  double value_ = 0.0;
};

}  // namespace specopt
