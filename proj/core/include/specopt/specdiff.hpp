#pragma once

#include <functional>
#include <span>
#include <vector>

#include "specopt/objective.hpp"

namespace specopt {

/// A direction in R^n with its cached Euclidean norm.
class Direction {
 public:
  explicit Direction(Vector v);

  const Vector& vector() const { return v_; }
  double norm() const { return norm_; }
  bool is_zero() const { return zero_; }

 private:
  Vector v_;
  double norm_ = 0.0;
  bool zero_ = true;
};

/// Specular directional derivative from its one-sided parts:
/// |v| A(d+/|v|, d-/|v|), including the infinite branches. Always finite.
/// Throws HypothesisViolation if both parts are +inf or both -inf, and
/// std::invalid_argument unless vnorm > 0.
double specular_from_one_sided(const OneSidedPair& pair, double vnorm);

/// Specular directional derivative of obj at x along v; zero for v == 0.
double specular_directional(const Objective& obj, const Vector& x, const Direction& v);

/// Specular gradient: the i-th entry is the specular partial derivative along e_i.
Vector specular_gradient(const Objective& obj, const Vector& x);

/// Row j is specular_gradient(components[j], x). Failures carry their (j, i)
/// location in a JacobianEntryError.
Matrix specular_jacobian(std::span<const ObjectivePtr> components, const Vector& x);

/// |A(forward ratio, backward ratio) - <ell, w>/|w||, the sampled residual of a
/// candidate specular Frechet differential ell at x along the increment w.
double frechet_residual(const Objective& obj, const Vector& x, const Vector& ell, const Vector& w);

/// Result of a finite-difference specular derivative estimate.
struct FdEstimate {
  double value = 0.0;     ///< estimate at the accepted step
  double h = 0.0;         ///< accepted step
  double agreement = 0.0; ///< |difference| of the accepted consecutive pair
  double previous = 0.0;  ///< estimate at the step before the accepted one
  bool converged = false; ///< false: value/previous hold the last two estimates
};

/// h_k = 2^-k for k = 10..24.
std::vector<double> default_fd_schedule();

/// Estimates the specular directional derivative of f at x along v from
///
///   |v| tan(atan(a_h)/2 + atan(b_h)/2),
///   a_h = (f(x + h v) - f(x)) / (h |v|),  b_h = (f(x) - f(x - h v)) / (h |v|),
///
/// over a strictly decreasing schedule of h. The accepted estimate is the one at
/// the smallest h whose value agrees with its predecessor to within
/// rtol * max(1, |value|). Slopes of magnitude >= kInfinityThreshold are
/// treated as infinite.
FdEstimate fd_specular_directional(const std::function<double(const Vector&)>& f, const Vector& x,
                                   const Vector& v, std::span<const double> h_schedule,
                                   double rtol = 1e-6);

FdEstimate fd_specular_directional(const std::function<double(const Vector&)>& f, const Vector& x,
                                   const Vector& v);

}  // namespace specopt
