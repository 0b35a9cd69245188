#include "specopt/specdiff.hpp"

#include <cmath>
#include <algorithm>
#include <stdexcept>
#include <string>

#include "specopt/scalar.hpp"

namespace specopt {

std::vector<OneSidedPair> Objective::coordinate_one_sided(const Vector& x) const {
  check_point(x, "coordinate_one_sided");
  const auto n = static_cast<Eigen::Index>(dimension());
  std::vector<OneSidedPair> pairs;
  pairs.reserve(dimension());
  Vector e = Vector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    e[i] = 1.0;
    pairs.push_back(one_sided(x, e));
    e[i] = 0.0;
  }
  return pairs;
}

void Objective::check_point(const Vector& x, const char* where) const {
  if (static_cast<std::size_t>(x.size()) != dimension())
    throw DimensionMismatch(where, dimension(), static_cast<std::size_t>(x.size()));
}

Direction::Direction(Vector v) : v_(std::move(v)) {
  norm_ = v_.norm();
  zero_ = norm_ == 0.0;
}

double specular_from_one_sided(const OneSidedPair& pair, double vnorm) {
  if (!(vnorm > 0.0) || !std::isfinite(vnorm))
    throw std::invalid_argument("specular_from_one_sided: direction norm must be positive");
  if (!pair.plus.is_finite() && pair.plus.kind() == pair.minus.kind())
    throw HypothesisViolation("one-sided derivatives are both " + pair.plus.to_string());
  const double inv = 1.0 / vnorm;
  const ExtendedReal a = afun(pair.plus.scaled(inv), pair.minus.scaled(inv));
  return vnorm * a.finite_value();
}

double specular_directional(const Objective& obj, const Vector& x, const Direction& v) {
  if (v.is_zero()) return 0.0;
  return specular_from_one_sided(obj.one_sided(x, v.vector()), v.norm());
}

Vector specular_gradient(const Objective& obj, const Vector& x) {
  const std::vector<OneSidedPair> pairs = obj.coordinate_one_sided(x);
  Vector g(static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    g[static_cast<Eigen::Index>(i)] = specular_from_one_sided(pairs[i], 1.0);
  return g;
}

Matrix specular_jacobian(std::span<const ObjectivePtr> components, const Vector& x) {
  Matrix jac(static_cast<Eigen::Index>(components.size()), x.size());
  for (std::size_t j = 0; j < components.size(); ++j) {
    const std::vector<OneSidedPair> pairs = components[j]->coordinate_one_sided(x);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      try {
        jac(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
            specular_from_one_sided(pairs[i], 1.0);
      } catch (const HypothesisViolation& e) {
        throw JacobianEntryError(j, i, e.what());
      }
    }
  }
  return jac;
}

double frechet_residual(const Objective& obj, const Vector& x, const Vector& ell, const Vector& w) {
  const double wn = w.norm();
  if (!(wn > 0.0)) throw std::invalid_argument("frechet_residual: increment must be nonzero");
  const double fx = obj.value(x);
  const double forward = (obj.value(x + w) - fx) / wn;
  const double backward = (fx - obj.value(x - w)) / wn;
  return std::fabs(afun(forward, backward) - ell.dot(w) / wn);
}

std::vector<double> default_fd_schedule() {
  std::vector<double> hs;
  for (int k = 10; k <= 24; ++k) hs.push_back(std::ldexp(1.0, -k));
  return hs;
}

FdEstimate fd_specular_directional(const std::function<double(const Vector&)>& f, const Vector& x,
                                   const Vector& v, std::span<const double> h_schedule,
                                   double rtol) {
  const double vn = v.norm();
  if (vn == 0.0) return FdEstimate{0.0, 0.0, 0.0, 0.0, true};
  if (h_schedule.size() < 2)
    throw std::invalid_argument("fd_specular_directional: schedule needs at least two steps");
  for (std::size_t k = 1; k < h_schedule.size(); ++k)
    if (!(h_schedule[k] < h_schedule[k - 1]) || !(h_schedule[k] > 0.0))
      throw std::invalid_argument("fd_specular_directional: schedule must decrease strictly");

  const double fx = f(x);
  auto estimate = [&](double h) {
    const double fwd = (f(x + h * v) - fx) / (h * vn);
    const double bwd = (fx - f(x - h * v)) / (h * vn);
    const double a = ExtendedReal::promoted(fwd).to_double();
    const double b = ExtendedReal::promoted(bwd).to_double();
    // atan(+/-inf) is +/-pi/2, which reproduces the infinite branches.
    return vn * std::tan(0.5 * std::atan(a) + 0.5 * std::atan(b));
  };

  FdEstimate out;
  double prev = estimate(h_schedule[0]);
  for (std::size_t k = 1; k < h_schedule.size(); ++k) {
    const double cur = estimate(h_schedule[k]);
    const double diff = std::fabs(cur - prev);
    if (diff <= rtol * std::max({1.0, std::fabs(cur), std::fabs(prev)})) {
      out = FdEstimate{cur, h_schedule[k], diff, prev, true};
    } else if (!out.converged) {
      out = FdEstimate{cur, h_schedule[k], diff, prev, false};
    }
    prev = cur;
  }
  return out;
}

FdEstimate fd_specular_directional(const std::function<double(const Vector&)>& f, const Vector& x,
                                   const Vector& v) {
  const std::vector<double> hs = default_fd_schedule();
  return fd_specular_directional(f, x, v, hs);
}

}  // namespace specopt
