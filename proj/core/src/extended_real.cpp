#include "specopt/extended_real.hpp"

#include <cmath>
#include <cstdio>

namespace specopt {

ExtendedReal::ExtendedReal(double v) {
  if (std::isnan(v)) throw std::invalid_argument("ExtendedReal: NaN is not an extended real");
  if (std::isinf(v)) {
    kind_ = v > 0 ? Kind::kPosInf : Kind::kNegInf;
  } else {
    value_ = v;
  }
}

ExtendedReal ExtendedReal::promoted(double v, double threshold) {
  if (!std::isnan(v) && std::fabs(v) >= threshold) return v > 0 ? pos_inf() : neg_inf();
  return ExtendedReal(v);
}

double ExtendedReal::to_double() const {
  switch (kind_) {
    case Kind::kPosInf: return HUGE_VAL;
    case Kind::kNegInf: return -HUGE_VAL;
    case Kind::kFinite: break;
  }
  return value_;
}

double ExtendedReal::finite_value() const {
  if (!is_finite()) throw std::domain_error("ExtendedReal: value is infinite");
  return value_;
}

ExtendedReal ExtendedReal::operator-() const {
  switch (kind_) {
    case Kind::kPosInf: return neg_inf();
    case Kind::kNegInf: return pos_inf();
    case Kind::kFinite: break;
  }
  return ExtendedReal(-value_);
}

ExtendedReal ExtendedReal::scaled(double positive) const {
  if (!is_finite()) return *this;
  return ExtendedReal(value_ * positive);
}

std::string ExtendedReal::to_string() const {
  switch (kind_) {
    case Kind::kPosInf: return "inf";
    case Kind::kNegInf: return "-inf";
    case Kind::kFinite: break;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

}  // namespace specopt
