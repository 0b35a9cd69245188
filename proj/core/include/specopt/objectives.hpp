#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "specopt/objective.hpp"

namespace specopt {

/// Data of the Elastic Net objective
///
///   f(x) = 1/(2m) |A x - b|^2 + lambda2/2 |x|^2 + lambda1 |x|_1.
struct ElasticNetProblem {
  Matrix A;  // m x n
  Vector b;  // m
  double lambda1 = 0.0;
  double lambda2 = 0.0;

  std::size_t rows() const { return static_cast<std::size_t>(A.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(A.cols()); }

  /// Throws std::invalid_argument on empty A, size mismatch, or negative lambdas.
  void validate() const;
};

double elastic_net_value(const ElasticNetProblem& p, const Vector& x);

/// (1/m) A^T (A x - b) + lambda2 x, the gradient of the smooth part.
Vector elastic_net_smooth_gradient(const ElasticNetProblem& p, const Vector& x);

/// Exact one-sided directional derivatives. Coordinates with x_i == 0 (exact
/// comparison) contribute +/-lambda1 |v_i|; the rest lambda1 sign(x_i) v_i.
OneSidedPair elastic_net_one_sided(const ElasticNetProblem& p, const Vector& x, const Vector& v);

class ElasticNetObjective final : public Objective {
 public:
  explicit ElasticNetObjective(std::shared_ptr<const ElasticNetProblem> problem);

  std::size_t dimension() const override { return problem_->cols(); }
  double value(const Vector& x) const override;
  OneSidedPair one_sided(const Vector& x, const Vector& v) const override;
  std::vector<OneSidedPair> coordinate_one_sided(const Vector& x) const override;

  const ElasticNetProblem& problem() const { return *problem_; }

 private:
  std::shared_ptr<const ElasticNetProblem> problem_;
};

/// Per-sample term f_j(x) = 1/2 (a_j . x - b_j)^2 + lambda2/2 |x|^2 + lambda1 |x|_1,
/// so that f = (1/m) sum_j f_j. Row index j is zero-based.
class ElasticNetComponent final : public Objective {
 public:
  ElasticNetComponent(std::shared_ptr<const ElasticNetProblem> problem, std::size_t j);

  std::size_t dimension() const override { return problem_->cols(); }
  double value(const Vector& x) const override;
  OneSidedPair one_sided(const Vector& x, const Vector& v) const override;
  std::vector<OneSidedPair> coordinate_one_sided(const Vector& x) const override;

  Vector smooth_gradient(const Vector& x) const;

 private:
  std::shared_ptr<const ElasticNetProblem> problem_;
  std::size_t row_;
};

/// Throws std::out_of_range unless j < m.
ObjectivePtr elastic_net_component(std::shared_ptr<const ElasticNetProblem> problem, std::size_t j);

std::vector<ObjectivePtr> elastic_net_components(std::shared_ptr<const ElasticNetProblem> problem);

/// f(x) = sum_i d_i/2 (x_i - b_i)^2 + lambda1 |x_i| with d_i > 0.
class DiagonalLasso final : public Objective {
 public:
  DiagonalLasso(Vector d, Vector b, double lambda1);

  std::size_t dimension() const override { return static_cast<std::size_t>(d_.size()); }
  double value(const Vector& x) const override;
  OneSidedPair one_sided(const Vector& x, const Vector& v) const override;

  const Vector& d() const { return d_; }
  const Vector& b() const { return b_; }
  double lambda1() const { return lambda1_; }

 private:
  Vector d_;
  Vector b_;
  double lambda1_;
};

/// Soft threshold x_i = sign(b_i) max(|b_i| - lambda1/d_i, 0), the minimizer of DiagonalLasso.
Vector diagonal_lasso_minimizer(const Vector& d, const Vector& b, double lambda1);

/// A convex function of one variable given by its value and its right and left
/// derivatives.
class PiecewiseFunction1D final : public Objective {
 public:
  using Fn = std::function<double(double)>;

  PiecewiseFunction1D(std::string name, Fn value, Fn right_derivative, Fn left_derivative,
                      std::vector<double> kinks);

  std::size_t dimension() const override { return 1; }
  double value(const Vector& x) const override;
  OneSidedPair one_sided(const Vector& x, const Vector& v) const override;

  double operator()(double t) const { return value_(t); }
  double right_derivative(double t) const { return right_(t); }
  double left_derivative(double t) const { return left_(t); }
  const std::string& name() const { return name_; }
  const std::vector<double>& kinks() const { return kinks_; }

 private:
  std::string name_;
  Fn value_;
  Fn right_;
  Fn left_;
  std::vector<double> kinks_;
};

/// |x|_1 in R^n.
class L1Norm final : public Objective {
 public:
  explicit L1Norm(std::size_t n) : n_(n) {}
  std::size_t dimension() const override { return n_; }
  double value(const Vector& x) const override;
  OneSidedPair one_sided(const Vector& x, const Vector& v) const override;

 private:
  std::size_t n_;
};

/// |x|_2 in R^n; nonsmooth only at the origin.
class EuclideanNorm final : public Objective {
 public:
  explicit EuclideanNorm(std::size_t n) : n_(n) {}
  std::size_t dimension() const override { return n_; }
  double value(const Vector& x) const override;
  OneSidedPair one_sided(const Vector& x, const Vector& v) const override;

 private:
  std::size_t n_;
};

/// |x|^2 / 2 in R^n.
class HalfSquaredNorm final : public Objective {
 public:
  explicit HalfSquaredNorm(std::size_t n) : n_(n) {}
  std::size_t dimension() const override { return n_; }
  double value(const Vector& x) const override;
  OneSidedPair one_sided(const Vector& x, const Vector& v) const override;

 private:
  std::size_t n_;
};

/// One-dimensional catalog: "abs", "maxaffine" (max(x, 2x)), "quadkink"
/// (x^2/2 + |x - 1|), "quad" (x^2). Throws std::invalid_argument on other names.
std::shared_ptr<const PiecewiseFunction1D> test_function_1d(std::string_view name);

std::vector<std::string> test_function_1d_names();

/// Everything test_function_1d knows plus "abs2d" (|x1| + |x2|), "norm2" and
/// "halfsq" (any dimension). dimension == 0 means the function's natural one.
/// Throws std::invalid_argument on an unknown name or an impossible dimension.
ObjectivePtr catalog_objective(std::string_view name, std::size_t dimension = 0);

std::vector<std::string> catalog_names();

}  // namespace specopt
