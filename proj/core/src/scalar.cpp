#include "specopt/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specopt {
namespace {

// A(a, +inf) = a + sqrt(1 + a^2), rearranged so that a << 0 does not cancel.
double toward_pos_inf(double a) {
  const double r = std::hypot(1.0, a);
  return a >= 0 ? a + r : 1.0 / (r - a);
}

// A(a, -inf) = a - sqrt(1 + a^2).
double toward_neg_inf(double a) { return -toward_pos_inf(-a); }

double afun_finite(double alpha, double beta) {
  // Canonical order makes the floating-point expression symmetric.
  const double lo = std::min(alpha, beta);
  const double hi = std::max(alpha, beta);
  if (lo == hi) return lo;
  const double sum = lo + hi;
  if (sum == 0.0) return 0.0;
  const double prod = lo * hi;
  const double root = std::hypot(1.0, lo) * std::hypot(1.0, hi);
  // (ab - 1 + S)/(a + b) = (a + b)/(1 - ab + S). The second form has no
  // cancellation unless ab is large and positive, where the first is safe.
  if (prod <= 1.0) return sum / ((1.0 - prod) + root);
  return ((prod - 1.0) + root) / sum;
}

}  // namespace

ExtendedReal afun(ExtendedReal alpha, ExtendedReal beta) {
  if (alpha.is_finite() && beta.is_finite())
    return ExtendedReal(afun_finite(alpha.finite_value(), beta.finite_value()));
  if (!alpha.is_finite() && !beta.is_finite()) {
    if (alpha.kind() == beta.kind()) return alpha;
    return ExtendedReal(0.0);
  }
  const ExtendedReal& fin = alpha.is_finite() ? alpha : beta;
  const ExtendedReal& inf = alpha.is_finite() ? beta : alpha;
  const double a = fin.finite_value();
  return ExtendedReal(inf.is_pos_inf() ? toward_pos_inf(a) : toward_neg_inf(a));
}

double afun(double alpha, double beta) {
  if (std::isnan(alpha) || std::isnan(beta)) throw std::invalid_argument("afun: NaN argument");
  return afun(ExtendedReal(alpha), ExtendedReal(beta)).to_double();
}

double afun_tan_form(double alpha, double beta) {
  if (std::isnan(alpha) || std::isnan(beta))
    throw std::invalid_argument("afun_tan_form: NaN argument");
  return std::tan(0.5 * std::atan(alpha) + 0.5 * std::atan(beta));
}

double bfun(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("bfun: a and b must be finite");
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("bfun: c must be positive");
  if (a == b) return a / c;
  const double ra = std::hypot(a, c);
  const double rb = std::hypot(b, c);
  const double den = c * ra + c * rb;
  if (a * b >= 0.0) return (a * rb + b * ra) / den;
  // Opposite signs: rationalize the numerator,
  // a rb + b ra = c^2 (a^2 - b^2) / (a rb - b ra), where a rb and -b ra share a sign.
  const double num = c * c * ((a - b) * (a + b)) / (a * rb - b * ra);
  return num / den;
}

}  // namespace specopt
