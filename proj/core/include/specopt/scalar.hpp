#pragma once

#include "specopt/extended_real.hpp"

namespace specopt {

/// The function A(alpha, beta): tangent of the half-sum of the angles whose
/// tangents are alpha and beta. Finite arguments use the closed form
///
///   A(a, b) = (a b - 1 + sqrt((1 + a^2)(1 + b^2))) / (a + b),   A(a, -a) = 0,
///
/// and infinite arguments use the extension
///
///   A(a, +/-inf) = a +/- sqrt(1 + a^2),  A(+/-inf, +/-inf) = +/-inf,  A(+/-inf, -/+inf) = 0.
///
/// The result is symmetric in its arguments bit for bit.
ExtendedReal afun(ExtendedReal alpha, ExtendedReal beta);

/// Finite-argument convenience overload. Throws std::invalid_argument on NaN;
/// IEEE infinities are accepted and follow the extension clauses.
double afun(double alpha, double beta);

/// tan(atan(alpha)/2 + atan(beta)/2). Reference form for cross-checking afun.
double afun_tan_form(double alpha, double beta);

/// B(a, b, c) = (a sqrt(b^2 + c^2) + b sqrt(a^2 + c^2)) / (c sqrt(a^2 + c^2) + c sqrt(b^2 + c^2)).
/// Equals A(a/c, b/c). Throws std::invalid_argument unless c > 0 and a, b finite.
double bfun(double a, double b, double c);

}  // namespace specopt
