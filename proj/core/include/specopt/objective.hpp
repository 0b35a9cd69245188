#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <memory>
#include <vector>

#include "specopt/errors.hpp"
#include "specopt/extended_real.hpp"

namespace specopt {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Forward and backward one-sided directional derivatives of a functional at
/// a point along a direction.
struct OneSidedPair {
  ExtendedReal plus;
  ExtendedReal minus;
};

/// A convex functional on R^n with an exact one-sided derivative oracle.
/// Implementations are immutable after construction and safe to share
/// read-only across threads.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::size_t dimension() const = 0;
  virtual double value(const Vector& x) const = 0;

  /// Must satisfy one_sided(x, v).plus == -one_sided(x, -v).minus.
  virtual OneSidedPair one_sided(const Vector& x, const Vector& v) const = 0;

  /// Pairs along the standard basis e_0..e_{n-1}. The default calls one_sided
  /// n times; objectives with a cheaper route override it.
  virtual std::vector<OneSidedPair> coordinate_one_sided(const Vector& x) const;

 protected:
  void check_point(const Vector& x, const char* where) const;
};

using ObjectivePtr = std::shared_ptr<const Objective>;

}  // namespace specopt
