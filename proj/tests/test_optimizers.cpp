#include <gtest/gtest.h>

#include <cmath>

#include "specopt/objectives.hpp"
#include "specopt/optimizers.hpp"
#include "specopt/specdiff.hpp"

namespace specopt {
namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

/// f(x) = sum x_i.
class Linear final : public Objective {
 public:
  explicit Linear(std::size_t n) : n_(n) {}
  std::size_t dimension() const override { return n_; }
  double value(const Vector& x) const override { return x.sum(); }
  OneSidedPair one_sided(const Vector&, const Vector& v) const override {
    return {ExtendedReal(v.sum()), ExtendedReal(v.sum())};
  }

 private:
  std::size_t n_;
};

std::shared_ptr<ElasticNetProblem> random_problem(CounterRng& rng, std::size_t m, std::size_t n, double l1,
                                                  double l2) {
  auto p = std::make_shared<ElasticNetProblem>();
  p->A = Matrix(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < p->A.size(); ++i) p->A.data()[i] = rng.normal();
  p->b = Vector(static_cast<Eigen::Index>(m));
  for (auto& v : p->b) v = rng.normal();
  p->lambda1 = l1;
  p->lambda2 = l2;
  return p;
}

DiagonalLasso random_diagonal_lasso(CounterRng& rng, std::size_t n, double l1) {
  Vector d(static_cast<Eigen::Index>(n));
  Vector b(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    d[i] = 0.5 + 1.5 * rng.uniform01();
    b[i] = 6 * rng.uniform01() - 3;
  }
  return DiagonalLasso(d, b, l1);
}

void expect_same_trajectory(const RunRecord& a, const RunRecord& b) {
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].k, b.rows[i].k);
    EXPECT_EQ(a.rows[i].f_current, b.rows[i].f_current);
    EXPECT_EQ(a.rows[i].f_best, b.rows[i].f_best);
    EXPECT_EQ(a.rows[i].grad_norm, b.rows[i].grad_norm);
  }
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.x_best, b.x_best);
  EXPECT_EQ(a.x_final, b.x_final);
}

TEST(StepSchedule, Shapes) {
  const auto s = StepSchedule::normalized_diminishing(4);
  EXPECT_DOUBLE_EQ(s.step(0, 2), 2.0);
  EXPECT_DOUBLE_EQ(s.step(3, 1), 1.0);
  const auto g = StepSchedule::geometric(0.5);
  EXPECT_EQ(g.step(0, 10), 0.5);
  EXPECT_EQ(g.step(4, 10), std::ldexp(1.0, -5));
  const auto gn = StepSchedule::geometric(0.5, true);
  EXPECT_EQ(gn.step(1, 2), 0.125);
  EXPECT_EQ(StepSchedule::constant(0.3).step(99, 5), 0.3);
  EXPECT_THROW(StepSchedule::geometric(1.0), std::invalid_argument);
  EXPECT_THROW(StepSchedule::normalized_diminishing(0), std::invalid_argument);
  EXPECT_THROW(StepSchedule::constant(-1), std::invalid_argument);
}

TEST(StepSchedule, SquareSummableNotSummable) {
  const auto s = StepSchedule::normalized_diminishing(4);
  double sum = 0;
  double sq = 0;
  for (std::size_t k = 0; k < 1000000; ++k) {
    sum += s.scale(k);
    sq += s.scale(k) * s.scale(k);
  }
  EXPECT_GT(sum, 4 * 13.0);                        // 4 H_{10^6} ~ 4 * 14.39
  EXPECT_NEAR(sq, 16 * M_PI * M_PI / 6, 1e-4 * 16);  // converges to 16 zeta(2)
}

TEST(Speg, AbsHandSimulation) {
  const auto f = test_function_1d("abs");
  const auto rec = speg_run(*f, vec({2}), StepSchedule::normalized_diminishing(4), {100, 1e-12});
  ASSERT_EQ(rec.rows.size(), 3u);
  EXPECT_EQ(rec.rows[0].f_current, 2.0);
  EXPECT_EQ(rec.rows[1].f_current, 2.0);
  EXPECT_EQ(rec.rows[2].f_current, 0.0);
  EXPECT_EQ(rec.rows[2].k, 2u);
  ASSERT_EQ(rec.steps.size(), 2u);
  EXPECT_EQ(rec.steps[0].h, 4.0);
  EXPECT_EQ(rec.steps[1].h, 2.0);
  EXPECT_EQ(rec.x_final, vec({0}));
  EXPECT_EQ(rec.status, RunStatus::kStationary);
  EXPECT_EQ(rec.f_best(), 0.0);
}

TEST(Speg, QuadraticUnitStep) {
  const auto f = catalog_objective("halfsq", 1);
  const auto rec = speg_run(*f, vec({1}), StepSchedule::constant(1), {100, 1e-12});
  EXPECT_EQ(rec.status, RunStatus::kStationary);
  EXPECT_EQ(rec.x_final, vec({0}));
  EXPECT_EQ(rec.f_best(), 0.0);
}

TEST(Speg, BestIterateMonotone) {
  CounterRng rng(3);
  const auto p = random_problem(rng, 20, 10, 0.5, 0.1);
  const ElasticNetObjective f(p);
  const auto rec = speg_run(f, Vector::Ones(10), StepSchedule::normalized_diminishing(4), {500, 1e-12});
  double running = HUGE_VAL;
  for (const auto& r : rec.rows) {
    running = std::min(running, r.f_current);
    ASSERT_EQ(r.f_best, running);
  }
  EXPECT_EQ(rec.f_best(), f.value(rec.x_best));
}

TEST(Speg, MaxItersRowCarriesGradientNorm) {
  const auto f = catalog_objective("halfsq", 2);
  const auto rec = speg_run(*f, vec({1, 1}), StepSchedule::constant(0.5), {3, 1e-12});
  ASSERT_EQ(rec.rows.size(), 4u);
  EXPECT_EQ(rec.status, RunStatus::kMaxIters);
  EXPECT_EQ(rec.rows.back().k, 3u);
  EXPECT_NEAR(rec.rows.back().grad_norm, std::sqrt(2.0) / 8, 1e-15);
}

TEST(Speg, NumericalFailureKeepsRecord) {
  const Linear f(1);
  const auto rec = speg_run(f, vec({0}), StepSchedule::constant(1e308), {10, 1e-12});
  EXPECT_EQ(rec.status, RunStatus::kNumericalFailure);
  ASSERT_EQ(rec.rows.size(), 2u);
  EXPECT_EQ(rec.rows[1].f_current, -1e308);
}

TEST(Speg, RejectsBadInputs) {
  const auto f = catalog_objective("abs");
  EXPECT_THROW(speg_run(*f, vec({1, 2}), StepSchedule::constant(1), {}), std::invalid_argument);
  EXPECT_THROW(speg_run(*f, vec({1}), StepSchedule::constant(1), {10, -1}), std::invalid_argument);
}

TEST(Speg, ConvergesOnDiagonalLasso) {
  CounterRng rng(7);
  for (int t = 0; t < 5; ++t) {
    const auto f = random_diagonal_lasso(rng, 10, 1.0);
    const Vector xs = diagonal_lasso_minimizer(f.d(), f.b(), f.lambda1());
    const auto rec = speg_run(f, Vector::Zero(10), StepSchedule::normalized_diminishing(4), {10000, 1e-12});
    EXPECT_LE((rec.x_best - xs).norm(), 1e-3);
  }
}

TEST(Speg, OptimalityDirectionAtOracleMinimizer) {
  CounterRng rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_diagonal_lasso(rng, 6, 1.0);
    const Vector xs = diagonal_lasso_minimizer(f.d(), f.b(), f.lambda1());
    for (int s = 0; s < 50; ++s) {
      Vector x(6);
      for (auto& v : x) v = rng.uniform_index(4) == 0 ? 0.0 : 4 * rng.normal();
      EXPECT_GE(specular_gradient(f, x).dot(x - xs), -1e-8);
    }
  }
}

TEST(BasicInequality, SingleStepExample) {
  const std::vector<StepTrace> trace{{1.0, 1.0}};
  const auto bound = basic_inequality_bound(trace, vec({1, 0}), vec({0, 0}));
  ASSERT_EQ(bound.size(), 1u);
  EXPECT_DOUBLE_EQ(bound[0], 1.0);
  EXPECT_THROW(basic_inequality_bound(std::span<const StepTrace>{}, vec({0}), vec({0})), std::invalid_argument);
}

TEST(BasicInequality, HoldsOnDiagonalLasso) {
  CounterRng rng(11);
  for (int t = 0; t < 5; ++t) {
    const auto f = random_diagonal_lasso(rng, 10, 1.0);
    const Vector xs = diagonal_lasso_minimizer(f.d(), f.b(), f.lambda1());
    const Vector x0 = Vector::Zero(10);
    const auto rec = speg_run(f, x0, StepSchedule::normalized_diminishing(4), {2000, 1e-12});
    const auto bound = basic_inequality_bound(rec, x0, xs);
    ASSERT_EQ(bound.size(), rec.steps.size());
    const double fstar = f.value(xs);
    for (std::size_t k = 0; k < bound.size(); ++k) {
      ASSERT_LE(rec.rows[k].f_best - fstar, bound[k] + 1e-12) << k;
    }
  }
}

TEST(BasicInequality, ConstantStepDecays) {
  const auto f = catalog_objective("halfsq", 2);
  const Vector x0 = vec({3, 4});
  const auto rec = gd_run(*f, x0, 0.01, 400);
  const auto bound = basic_inequality_bound(rec, x0, Vector::Zero(2));
  EXPECT_LT(bound[399], bound[99]);
  EXPECT_LT(bound[99], bound[9]);
}

TEST(Gd, QuadraticExamples) {
  const auto f = catalog_objective("halfsq", 1);
  const auto one = gd_run(*f, vec({1}), 0.1, 1);
  EXPECT_DOUBLE_EQ(one.x_final[0], 0.9);
  const auto many = gd_run(*f, vec({1}), 0.1, 20);
  EXPECT_NEAR(many.x_final[0], std::pow(0.9, 20), 1e-15);
  for (std::size_t k = 1; k < many.rows.size(); ++k)
    EXPECT_NEAR(many.rows[k].f_current / many.rows[k - 1].f_current, 0.81, 1e-12);
}

TEST(Adam, FirstStepWithConstantGradient) {
  const Linear f(1);
  const auto rec = adam_run(f, vec({2}), {}, 1);
  EXPECT_NEAR(rec.x_final[0], 2 - 0.01 / (1 + 1e-8), 1e-15);
  EXPECT_THROW(adam_run(f, vec({2}), {0.0}, 1), std::invalid_argument);
}

TEST(Adam, ZeroGradientFixesIterates) {
  const auto f = catalog_objective("abs");
  const auto rec = adam_run(*f, vec({0}), {}, 5);
  EXPECT_EQ(rec.x_final, vec({0}));
}

TEST(Sspeg, SingleComponentMatchesSpeg) {
  CounterRng gen(13);
  const auto p = random_problem(gen, 1, 6, 0.3, 0.2);
  const ElasticNetObjective f(p);
  const auto comps = elastic_net_components(p);
  const Vector x0 = Vector::Ones(6);
  const auto sched = StepSchedule::normalized_diminishing(4);
  CounterRng rng(1);
  expect_same_trajectory(sspeg_run(f, comps, x0, sched, {200, 1e-12}, rng), speg_run(f, x0, sched, {200, 1e-12}));
}

TEST(Sspeg, UnbiasedAtSmoothPoints) {
  auto p = std::make_shared<ElasticNetProblem>();
  const double c = std::sqrt(0.5);
  p->A = Matrix(2, 2);
  p->A << c, c, c, -c;
  p->b = vec({0.3, -1.1});
  const auto comps = elastic_net_components(p);
  const Vector x = vec({0.7, -0.4});
  const Vector g0 = specular_gradient(*comps[0], x);
  const Vector g1 = specular_gradient(*comps[1], x);
  CounterRng rng(17);
  const int draws = 100000;
  Vector mean = Vector::Zero(2);
  for (int i = 0; i < draws; ++i) mean += rng.uniform_index(2) == 0 ? g0 : g1;
  mean /= draws;
  const Vector full = elastic_net_smooth_gradient(*p, x);
  const Vector sigma = ((g0 - g1) / 2).cwiseAbs() / std::sqrt(static_cast<double>(draws));
  for (Eigen::Index i = 0; i < 2; ++i) EXPECT_LE(std::fabs(mean[i] - full[i]), 3 * sigma[i]);
}

TEST(Hspeg, SwitchExtremes) {
  CounterRng gen(19);
  const auto p = random_problem(gen, 30, 8, 0.5, 1.0);
  const ElasticNetObjective f(p);
  const auto comps = elastic_net_components(p);
  const Vector x0 = Vector::Ones(8);
  const auto sched = StepSchedule::normalized_diminishing(4);
  const RunLimits lim{50, 1e-12};
  CounterRng r1(5);
  expect_same_trajectory(hspeg_run(f, comps, x0, sched, 50, lim, r1), speg_run(f, x0, sched, lim));
  CounterRng r2(5);
  CounterRng r3(5);
  expect_same_trajectory(hspeg_run(f, comps, x0, sched, 0, lim, r2), sspeg_run(f, comps, x0, sched, lim, r3));
  CounterRng r4(5);
  EXPECT_THROW(hspeg_run(f, comps, x0, sched, 51, lim, r4), std::invalid_argument);
}

TEST(Hspeg, DeterministicGivenStream) {
  CounterRng gen(23);
  const auto p = random_problem(gen, 40, 10, 1.0, 1.0);
  const ElasticNetObjective f(p);
  const auto comps = elastic_net_components(p);
  const Vector x0 = Vector::Ones(10);
  const auto sched = StepSchedule::normalized_diminishing(4);
  CounterRng a(99);
  CounterRng b(99);
  expect_same_trajectory(hspeg_run(f, comps, x0, sched, 10, {300, 1e-12}, a),
                         hspeg_run(f, comps, x0, sched, 10, {300, 1e-12}, b));
}

TEST(Projection, Examples) {
  const EuclideanBall ball{vec({0, 0}), 1.0};
  EXPECT_TRUE(project(vec({2, 0}), ball).isApprox(vec({1, 0})));
  const Box box{vec({0, 0}), vec({1, 1})};
  EXPECT_EQ(project(vec({-0.5, 2}), box), vec({0, 1}));
  EXPECT_EQ(project(vec({0.25, 0.5}), box), vec({0.25, 0.5}));
  EXPECT_EQ(project(vec({0.25, 0.5}), ball), vec({0.25, 0.5}));
  EXPECT_TRUE(projected_speg_step(vec({1, 0}), vec({-1, 0}), 1.0, ball).isApprox(vec({1, 0})));
}

TEST(Projection, MalformedSets) {
  EXPECT_THROW(project(vec({0, 0}), EuclideanBall{vec({0, 0}), 0.0}), std::invalid_argument);
  EXPECT_THROW(project(vec({0, 0}), Box{vec({1, 0}), vec({0, 1})}), std::invalid_argument);
  EXPECT_THROW(projected_speg_step(vec({0}), vec({1}), 0.0, Box{vec({0}), vec({1})}), std::invalid_argument);
}

TEST(Projection, IsNonExpansive) {
  CounterRng rng(29);
  const Box box{vec({-1, 0, 2}), vec({1, 0.5, 3})};
  const EuclideanBall ball{vec({1, -1, 0}), 2.0};
  for (int t = 0; t < 500; ++t) {
    const Vector a = 3 * vec({rng.normal(), rng.normal(), rng.normal()});
    const Vector b = 3 * vec({rng.normal(), rng.normal(), rng.normal()});
    EXPECT_LE((project(a, box) - project(b, box)).norm(), (a - b).norm() + 1e-12);
    EXPECT_LE((project(a, ball) - project(b, ball)).norm(), (a - b).norm() + 1e-12);
  }
}

}  // namespace
}  // namespace specopt
