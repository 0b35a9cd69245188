#include "specopt/checks.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "specopt/objectives.hpp"
#include "specopt/optimizers.hpp"
#include "specopt/rng.hpp"
#include "specopt/scalar.hpp"
#include "specopt/specdiff.hpp"

namespace specopt {
namespace {

// Magnitude log-uniform on [1e-6, 1e6] with a random sign.
double log_uniform_signed(CounterRng& rng) {
  const double mag = std::pow(10.0, -6.0 + 12.0 * rng.uniform01());
  return rng.uniform01() < 0.5 ? -mag : mag;
}

double uniform(CounterRng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform01(); }

// Normal vector with roughly `zero_fraction` of its entries set exactly to zero.
Vector sparse_normal(CounterRng& rng, Eigen::Index n, double zero_fraction) {
  Vector x(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double z = rng.normal();
    x[i] = rng.uniform01() < zero_fraction ? 0.0 : z;
  }
  return x;
}

std::shared_ptr<const ElasticNetProblem> random_problem(CounterRng& rng, std::size_t max_dim) {
  auto p = std::make_shared<ElasticNetProblem>();
  const auto m = static_cast<Eigen::Index>(1 + rng.uniform_index(max_dim));
  const auto n = static_cast<Eigen::Index>(1 + rng.uniform_index(max_dim));
  p->A.resize(m, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) p->A(i, j) = rng.normal();
  p->b.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) p->b[i] = rng.normal();
  p->lambda1 = uniform(rng, 0.0, 2.0);
  p->lambda2 = uniform(rng, 0.0, 2.0);
  return p;
}

struct Recorder {
  SuiteResult result;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Recorder(std::string name) { result.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    if (ok) return;
    if (result.failures++ == 0) result.first_failure = describe();
  }

  SuiteResult finish(std::size_t samples) {
    result.samples = samples;
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }
};

std::string fmt(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [k, v] : kv) {
    os << (first ? "" : ", ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

}  // namespace

std::size_t samples_for(CheckLevel level) { return level == CheckLevel::kFast ? 100 : 10000; }

SuiteResult check_scalar_identities(std::size_t samples, std::uint64_t seed) {
  Recorder rec("scalar identities");
  CounterRng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const double a = log_uniform_signed(rng);
    const double b = log_uniform_signed(rng);
    const double ab = afun(a, b);
    rec.expect(ab == afun(b, a), [&] { return "symmetry: " + fmt({{"a", a}, {"b", b}}); });
    rec.expect(std::min(a, b) <= ab && ab <= std::max(a, b),
               [&] { return "betweenness: " + fmt({{"a", a}, {"b", b}, {"A", ab}}); });
    rec.expect(std::fabs(ab) <= std::fabs(a + b) / 2 + 1e-12,
               [&] { return "magnitude: " + fmt({{"a", a}, {"b", b}, {"A", ab}}); });
    const double tf = afun_tan_form(a, b);
    rec.expect(std::fabs(ab - tf) <= 1e-9 * (1 + std::fabs(ab)),
               [&] { return "tan form: " + fmt({{"a", a}, {"b", b}, {"A", ab}, {"tan", tf}}); });
    const double c = std::pow(10.0, uniform(rng, -6.0, 6.0));
    const double bb = bfun(a, b, c);
    const double ref = afun(a / c, b / c);
    rec.expect(std::fabs(bb - ref) <= 1e-9 * (1 + std::fabs(bb)),
               [&] { return "B scaling: " + fmt({{"a", a}, {"b", b}, {"c", c}, {"B", bb}, {"A", ref}}); });
  }
  return rec.finish(samples);
}

SuiteResult check_ordering_lemma(std::size_t samples, std::uint64_t seed) {
  Recorder rec("ordering lemma");
  CounterRng rng(seed);
  constexpr double kSlack = 1e-9;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto p = random_problem(rng, 20);
    const ElasticNetObjective f(p);
    const auto n = static_cast<Eigen::Index>(p->cols());
    const Vector x = sparse_normal(rng, n, 0.3);
    const Vector v = sparse_normal(rng, n, 0.2);
    if (v.norm() == 0.0) continue;
    const double fx = f.value(x);
    const double back = fx - f.value(x - v);
    const double fwd = f.value(x + v) - fx;
    const OneSidedPair pair = f.one_sided(x, v);
    const double dm = pair.minus.finite_value();
    const double dp = pair.plus.finite_value();
    const double ds = specular_from_one_sided(pair, v.norm());
    rec.expect(back <= dm + kSlack && dm <= ds + kSlack && ds <= dp + kSlack && dp <= fwd + kSlack, [&] {
      return "chain: " + fmt({{"back", back}, {"d-", dm}, {"ds", ds}, {"d+", dp}, {"fwd", fwd}});
    });
  }
  return rec.finish(samples);
}

SuiteResult check_subgradient_inequality(std::size_t samples, std::uint64_t seed) {
  Recorder rec("subgradient inequality");
  CounterRng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto p = random_problem(rng, 20);
    const ElasticNetObjective f(p);
    const auto n = static_cast<Eigen::Index>(p->cols());
    const Vector x = sparse_normal(rng, n, 0.3);
    const Vector w = sparse_normal(rng, n, 0.3) * std::pow(10.0, uniform(rng, -3.0, 1.0)) + x;
    const double fw = f.value(w);
    const double lin = f.value(x) + specular_gradient(f, x).dot(w - x);
    rec.expect(fw >= lin - 1e-8 * (1 + std::fabs(fw)), [&] { return "f(w) below linearization: " + fmt({{"f(w)", fw}, {"lin", lin}}); });
  }
  return rec.finish(samples);
}

SuiteResult check_quasi_fermat(std::size_t samples, std::uint64_t seed) {
  Recorder rec("quasi-Fermat");
  CounterRng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto n = static_cast<Eigen::Index>(1 + rng.uniform_index(20));
    Vector d(n), b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      d[i] = uniform(rng, 0.5, 2.0);
      b[i] = uniform(rng, -3.0, 3.0);
    }
    const double lambda1 = uniform(rng, 0.0, 3.0);

    // Directional form at the exact minimizer, any number of kinks.
    {
      const DiagonalLasso f(d, b, lambda1);
      const Vector xstar = diagonal_lasso_minimizer(d, b, lambda1);
      for (int k = 0; k < 10; ++k) {
        const Direction v(sparse_normal(rng, n, 0.2));
        const double ds = std::fabs(specular_directional(f, xstar, v));
        rec.expect(ds <= v.norm() + 1e-6, [&] { return "directional: " + fmt({{"|ds|", ds}, {"|v|", v.norm()}}); });
      }
    }

    // Gradient form where f is specularly Frechet differentiable at x*: at most
    // one coordinate of the minimizer on its kink.
    for (Eigen::Index i = 1; i < n; ++i) {
      const double threshold = lambda1 / d[i];
      if (std::fabs(b[i]) <= threshold + 0.1) b[i] = std::copysign(threshold + 0.1 + std::fabs(b[i]), b[i]);
    }
    const DiagonalLasso f(d, b, lambda1);
    const Vector xstar = diagonal_lasso_minimizer(d, b, lambda1);
    const Vector g = specular_gradient(f, xstar);
    const double sum = g.sum();
    const double rootn = std::sqrt(static_cast<double>(n));
    rec.expect(std::fabs(sum) <= rootn + 1e-6, [&] { return "sum bound: " + fmt({{"sum", sum}, {"sqrt n", rootn}}); });
    for (int k = 0; k < 10; ++k) {
      Vector v(n);
      for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.normal();
      const double lhs = std::fabs(g.dot(v));
      rec.expect(lhs <= v.norm() + 1e-6, [&] { return "gradient: " + fmt({{"|g.v|", lhs}, {"|v|", v.norm()}}); });
    }
  }
  return rec.finish(samples);
}

SuiteResult check_quasi_mvt(std::size_t samples, std::uint64_t seed) {
  Recorder rec("quasi-MVT grid");
  CounterRng rng(seed);
  const auto names = test_function_1d_names();
  constexpr int kGrid = 10000;
  const Vector unit = Vector::Ones(1);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto f = test_function_1d(names[s % names.size()]);
    double a = uniform(rng, -3.0, 3.0);
    double b = uniform(rng, -3.0, 3.0);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) b = a + 1e-3;
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    Vector t(1);
    for (int i = 0; i <= kGrid; ++i) {
      t[0] = a + (b - a) * i / kGrid;
      const double ds = specular_from_one_sided(f->one_sided(t, unit), 1.0);
      lo = std::min(lo, ds);
      hi = std::max(hi, ds);
    }
    const double secant = (*f)(b) - (*f)(a);
    const double slack = 1e-3 * (b - a);
    rec.expect(lo * (b - a) - slack <= secant && secant <= hi * (b - a) + slack, [&] {
      return f->name() + ": " + fmt({{"a", a}, {"b", b}, {"min", lo}, {"max", hi}, {"secant", secant}});
    });
  }
  return rec.finish(samples);
}

SuiteResult check_estimator_consistency(std::size_t samples, std::uint64_t seed) {
  Recorder rec("estimator consistency");
  CounterRng rng(seed);
  const auto names = test_function_1d_names();
  const Vector unit = Vector::Ones(1);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto f = test_function_1d(names[s % names.size()]);
    Vector x(1);
    // Every fourth sample sits on a kink when the function has one.
    if (s % 4 == 0 && !f->kinks().empty()) {
      x[0] = f->kinks()[rng.uniform_index(f->kinks().size())];
    } else {
      x[0] = uniform(rng, -3.0, 3.0);
    }
    const double exact = specular_from_one_sided(f->one_sided(x, unit), 1.0);
    const FdEstimate est = fd_specular_directional([&f](const Vector& y) { return f->value(y); }, x, unit);
    rec.expect(est.converged && std::fabs(est.value - exact) <= 1e-5, [&] {
      return f->name() + ": " + fmt({{"x", x[0]}, {"fd", est.value}, {"exact", exact}});
    });
  }
  return rec.finish(samples);
}

SuiteResult check_basic_inequality(std::size_t samples, std::uint64_t seed) {
  Recorder rec("basic inequality");
  CounterRng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto n = static_cast<Eigen::Index>(1 + rng.uniform_index(10));
    Vector d(n), b(n), x0(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      d[i] = uniform(rng, 0.5, 2.0);
      b[i] = uniform(rng, -3.0, 3.0);
      x0[i] = rng.normal();
    }
    const DiagonalLasso f(d, b, 1.0);
    const Vector xstar = diagonal_lasso_minimizer(d, b, 1.0);
    const double fstar = f.value(xstar);
    const RunRecord run = speg_run(f, x0, StepSchedule::normalized_diminishing(4.0), {50, 1e-12});
    if (run.steps.empty()) continue;
    const auto bound = basic_inequality_bound(run, x0, xstar);
    for (std::size_t k = 0; k < bound.size(); ++k) {
      const double gap = run.rows[k].f_best - fstar;
      rec.expect(gap <= bound[k] + 1e-12 * (1 + std::fabs(fstar)), [&] {
        return "k=" + std::to_string(k) + ": " + fmt({{"gap", gap}, {"bound", bound[k]}});
      });
    }
  }
  return rec.finish(samples);
}

std::vector<SuiteResult> run_check_suites(CheckLevel level, std::uint64_t seed) {
  const std::size_t n = samples_for(level);
  return {
      check_scalar_identities(n, derive_seed(seed, 1)),
      check_ordering_lemma(n, derive_seed(seed, 2)),
      check_subgradient_inequality(n, derive_seed(seed, 3)),
      check_quasi_fermat(n, derive_seed(seed, 4)),
      check_quasi_mvt(n, derive_seed(seed, 5)),
      check_estimator_consistency(n, derive_seed(seed, 6)),
      check_basic_inequality(n, derive_seed(seed, 7)),
  };
}

}  // namespace specopt
