#include "specopt/objectives.hpp"

#include <cmath>
#include <stdexcept>

namespace specopt {
namespace {

void check_dim(const Vector& x, std::size_t n, const char* where) {
  if (static_cast<std::size_t>(x.size()) != n)
    throw DimensionMismatch(where, n, static_cast<std::size_t>(x.size()));
}

double sign(double t) { return t > 0.0 ? 1.0 : -1.0; }

// lambda1 * sum_i d+(x_i, v_i) and lambda1 * sum_i d-(x_i, v_i).
struct L1Parts {
  double plus = 0.0;
  double minus = 0.0;
};

L1Parts l1_one_sided(const Vector& x, const Vector& v) {
  L1Parts s;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] != 0.0) {
      const double t = sign(x[i]) * v[i];
      s.plus += t;
      s.minus += t;
    } else {
      s.plus += std::fabs(v[i]);
      s.minus -= std::fabs(v[i]);
    }
  }
  return s;
}

std::vector<OneSidedPair> coordinate_pairs(const Vector& smooth_grad, const Vector& x, double lambda1) {
  std::vector<OneSidedPair> pairs;
  pairs.reserve(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double g = smooth_grad[i];
    if (x[i] != 0.0) {
      const ExtendedReal s(g + lambda1 * sign(x[i]));
      pairs.push_back({s, s});
    } else {
      pairs.push_back({ExtendedReal(g + lambda1), ExtendedReal(g - lambda1)});
    }
  }
  return pairs;
}

}  // namespace

void ElasticNetProblem::validate() const {
  if (A.rows() < 1 || A.cols() < 1) throw std::invalid_argument("ElasticNetProblem: A must be nonempty");
  if (b.size() != A.rows()) throw DimensionMismatch("ElasticNetProblem: b", rows(), static_cast<std::size_t>(b.size()));
  if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0))
    throw std::invalid_argument("ElasticNetProblem: lambda1 and lambda2 must be nonnegative");
}

double elastic_net_value(const ElasticNetProblem& p, const Vector& x) {
  check_dim(x, p.cols(), "elastic_net_value");
  const double m = static_cast<double>(p.rows());
  const Vector r = p.A * x - p.b;
  return r.squaredNorm() / (2.0 * m) + 0.5 * p.lambda2 * x.squaredNorm() + p.lambda1 * x.lpNorm<1>();
}

Vector elastic_net_smooth_gradient(const ElasticNetProblem& p, const Vector& x) {
  check_dim(x, p.cols(), "elastic_net_smooth_gradient");
  const double m = static_cast<double>(p.rows());
  const Vector r = p.A * x - p.b;
  return (p.A.transpose() * r) / m + p.lambda2 * x;
}

OneSidedPair elastic_net_one_sided(const ElasticNetProblem& p, const Vector& x, const Vector& v) {
  check_dim(v, p.cols(), "elastic_net_one_sided");
  const double gv = elastic_net_smooth_gradient(p, x).dot(v);
  const L1Parts l1 = l1_one_sided(x, v);
  return {ExtendedReal(gv + p.lambda1 * l1.plus), ExtendedReal(gv + p.lambda1 * l1.minus)};
}

ElasticNetObjective::ElasticNetObjective(std::shared_ptr<const ElasticNetProblem> problem)
    : problem_(std::move(problem)) {
  if (!problem_) throw std::invalid_argument("ElasticNetObjective: null problem");
  problem_->validate();
}

double ElasticNetObjective::value(const Vector& x) const { return elastic_net_value(*problem_, x); }

OneSidedPair ElasticNetObjective::one_sided(const Vector& x, const Vector& v) const {
  return elastic_net_one_sided(*problem_, x, v);
}

std::vector<OneSidedPair> ElasticNetObjective::coordinate_one_sided(const Vector& x) const {
  return coordinate_pairs(elastic_net_smooth_gradient(*problem_, x), x, problem_->lambda1);
}

ElasticNetComponent::ElasticNetComponent(std::shared_ptr<const ElasticNetProblem> problem, std::size_t j)
    : problem_(std::move(problem)), row_(j) {
  if (!problem_) throw std::invalid_argument("ElasticNetComponent: null problem");
  problem_->validate();
  if (j >= problem_->rows())
    throw std::out_of_range("ElasticNetComponent: row " + std::to_string(j) + " out of range (m = " +
                            std::to_string(problem_->rows()) + ")");
}

double ElasticNetComponent::value(const Vector& x) const {
  check_point(x, "ElasticNetComponent::value");
  const auto& p = *problem_;
  const double r = p.A.row(static_cast<Eigen::Index>(row_)).dot(x) - p.b[static_cast<Eigen::Index>(row_)];
  return 0.5 * r * r + 0.5 * p.lambda2 * x.squaredNorm() + p.lambda1 * x.lpNorm<1>();
}

Vector ElasticNetComponent::smooth_gradient(const Vector& x) const {
  check_point(x, "ElasticNetComponent::smooth_gradient");
  const auto& p = *problem_;
  const auto a = p.A.row(static_cast<Eigen::Index>(row_));
  const double r = a.dot(x) - p.b[static_cast<Eigen::Index>(row_)];
  return r * a.transpose() + p.lambda2 * x;
}

OneSidedPair ElasticNetComponent::one_sided(const Vector& x, const Vector& v) const {
  check_point(v, "ElasticNetComponent::one_sided");
  const double gv = smooth_gradient(x).dot(v);
  const L1Parts l1 = l1_one_sided(x, v);
  return {ExtendedReal(gv + problem_->lambda1 * l1.plus), ExtendedReal(gv + problem_->lambda1 * l1.minus)};
}

std::vector<OneSidedPair> ElasticNetComponent::coordinate_one_sided(const Vector& x) const {
  return coordinate_pairs(smooth_gradient(x), x, problem_->lambda1);
}

ObjectivePtr elastic_net_component(std::shared_ptr<const ElasticNetProblem> problem, std::size_t j) {
  return std::make_shared<ElasticNetComponent>(std::move(problem), j);
}

std::vector<ObjectivePtr> elastic_net_components(std::shared_ptr<const ElasticNetProblem> problem) {
  std::vector<ObjectivePtr> out;
  out.reserve(problem->rows());
  for (std::size_t j = 0; j < problem->rows(); ++j) out.push_back(elastic_net_component(problem, j));
  return out;
}

// --- diagonal lasso --------------------------------------------------------

DiagonalLasso::DiagonalLasso(Vector d, Vector b, double lambda1)
    : d_(std::move(d)), b_(std::move(b)), lambda1_(lambda1) {
  if (d_.size() < 1 || d_.size() != b_.size())
    throw std::invalid_argument("DiagonalLasso: d and b must be nonempty and of equal size");
  if (!((d_.array() > 0.0).all())) throw std::invalid_argument("DiagonalLasso: d must be positive");
  if (!(lambda1_ >= 0.0)) throw std::invalid_argument("DiagonalLasso: lambda1 must be nonnegative");
}

double DiagonalLasso::value(const Vector& x) const {
  check_point(x, "DiagonalLasso::value");
  return 0.5 * (d_.array() * (x - b_).array().square()).sum() + lambda1_ * x.lpNorm<1>();
}

OneSidedPair DiagonalLasso::one_sided(const Vector& x, const Vector& v) const {
  check_point(x, "DiagonalLasso::one_sided");
  check_point(v, "DiagonalLasso::one_sided");
  const Vector g = d_.cwiseProduct(x - b_);
  const double gv = g.dot(v);
  const L1Parts l1 = l1_one_sided(x, v);
  return {ExtendedReal(gv + lambda1_ * l1.plus), ExtendedReal(gv + lambda1_ * l1.minus)};
}

Vector diagonal_lasso_minimizer(const Vector& d, const Vector& b, double lambda1) {
  if (d.size() != b.size()) throw DimensionMismatch("diagonal_lasso_minimizer", static_cast<std::size_t>(d.size()), static_cast<std::size_t>(b.size()));
  if (!((d.array() > 0.0).all())) throw std::invalid_argument("diagonal_lasso_minimizer: d must be positive");
  if (!(lambda1 >= 0.0)) throw std::invalid_argument("diagonal_lasso_minimizer: lambda1 must be nonnegative");
  Vector x(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    const double shrunk = std::fabs(b[i]) - lambda1 / d[i];
    x[i] = shrunk > 0.0 ? std::copysign(shrunk, b[i]) : 0.0;
  }
  return x;
}

// --- one-dimensional catalog -----------------------------------------------

PiecewiseFunction1D::PiecewiseFunction1D(std::string name, Fn value, Fn right_derivative,
                                         Fn left_derivative, std::vector<double> kinks)
    : name_(std::move(name)),
      value_(std::move(value)),
      right_(std::move(right_derivative)),
      left_(std::move(left_derivative)),
      kinks_(std::move(kinks)) {}

double PiecewiseFunction1D::value(const Vector& x) const {
  check_point(x, "PiecewiseFunction1D::value");
  return value_(x[0]);
}

OneSidedPair PiecewiseFunction1D::one_sided(const Vector& x, const Vector& v) const {
  check_point(x, "PiecewiseFunction1D::one_sided");
  check_point(v, "PiecewiseFunction1D::one_sided");
  const double t = x[0];
  const double s = v[0];
  // Moving along s < 0 reads the left derivative first.
  if (s >= 0.0) return {ExtendedReal(s * right_(t)), ExtendedReal(s * left_(t))};
  return {ExtendedReal(s * left_(t)), ExtendedReal(s * right_(t))};
}

std::shared_ptr<const PiecewiseFunction1D> test_function_1d(std::string_view name) {
  using P = PiecewiseFunction1D;
  if (name == "abs") {
    return std::make_shared<P>(
        "abs", [](double t) { return std::fabs(t); },
        [](double t) { return t < 0.0 ? -1.0 : 1.0; },
        [](double t) { return t > 0.0 ? 1.0 : -1.0; }, std::vector<double>{0.0});
  }
  if (name == "maxaffine") {
    return std::make_shared<P>(
        "maxaffine", [](double t) { return std::max(t, 2.0 * t); },
        [](double t) { return t < 0.0 ? 1.0 : 2.0; },
        [](double t) { return t > 0.0 ? 2.0 : 1.0; }, std::vector<double>{0.0});
  }
  if (name == "quadkink") {
    return std::make_shared<P>(
        "quadkink", [](double t) { return 0.5 * t * t + std::fabs(t - 1.0); },
        [](double t) { return t + (t < 1.0 ? -1.0 : 1.0); },
        [](double t) { return t + (t > 1.0 ? 1.0 : -1.0); }, std::vector<double>{1.0});
  }
  if (name == "quad") {
    return std::make_shared<P>(
        "quad", [](double t) { return t * t; }, [](double t) { return 2.0 * t; },
        [](double t) { return 2.0 * t; }, std::vector<double>{});
  }
  throw std::invalid_argument("unknown test function '" + std::string(name) + "'");
}

std::vector<std::string> test_function_1d_names() { return {"abs", "maxaffine", "quadkink", "quad"}; }

// --- n-dimensional catalog -------------------------------------------------

double L1Norm::value(const Vector& x) const {
  check_point(x, "L1Norm::value");
  return x.lpNorm<1>();
}

OneSidedPair L1Norm::one_sided(const Vector& x, const Vector& v) const {
  check_point(x, "L1Norm::one_sided");
  check_point(v, "L1Norm::one_sided");
  const L1Parts s = l1_one_sided(x, v);
  return {ExtendedReal(s.plus), ExtendedReal(s.minus)};
}

double EuclideanNorm::value(const Vector& x) const {
  check_point(x, "EuclideanNorm::value");
  return x.norm();
}

OneSidedPair EuclideanNorm::one_sided(const Vector& x, const Vector& v) const {
  check_point(x, "EuclideanNorm::one_sided");
  check_point(v, "EuclideanNorm::one_sided");
  const double xn = x.norm();
  if (xn == 0.0) return {ExtendedReal(v.norm()), ExtendedReal(-v.norm())};
  const ExtendedReal s(x.dot(v) / xn);
  return {s, s};
}

double HalfSquaredNorm::value(const Vector& x) const {
  check_point(x, "HalfSquaredNorm::value");
  return 0.5 * x.squaredNorm();
}

OneSidedPair HalfSquaredNorm::one_sided(const Vector& x, const Vector& v) const {
  check_point(x, "HalfSquaredNorm::one_sided");
  check_point(v, "HalfSquaredNorm::one_sided");
  const ExtendedReal s(x.dot(v));
  return {s, s};
}

ObjectivePtr catalog_objective(std::string_view name, std::size_t dimension) {
  auto require = [&](std::size_t natural) {
    if (dimension != 0 && dimension != natural)
      throw std::invalid_argument("'" + std::string(name) + "' has dimension " + std::to_string(natural) +
                                  ", got " + std::to_string(dimension));
  };
  if (name == "abs2d") {
    require(2);
    return std::make_shared<L1Norm>(2);
  }
  if (name == "norm2" || name == "halfsq") {
    const std::size_t n = dimension == 0 ? 1 : dimension;
    if (name == "norm2") return std::make_shared<EuclideanNorm>(n);
    return std::make_shared<HalfSquaredNorm>(n);
  }
  auto fn = test_function_1d(name);
  require(1);
  return fn;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names = test_function_1d_names();
  names.insert(names.end(), {"abs2d", "norm2", "halfsq"});
  return names;
}

}  // namespace specopt
