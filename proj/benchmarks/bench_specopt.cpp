#include <benchmark/benchmark.h>

#include "specopt/harness.hpp"
#include "specopt/objectives.hpp"
#include "specopt/optimizers.hpp"
#include "specopt/rng.hpp"
#include "specopt/scalar.hpp"
#include "specopt/specdiff.hpp"

namespace {

using namespace specopt;

void BM_Afun(benchmark::State& state) {
  CounterRng rng(1);
  std::vector<double> xs(4096);
  for (auto& x : xs) x = 10 * rng.normal();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(afun(xs[i & 4095], xs[(i + 1) & 4095]));
    ++i;
  }
}
BENCHMARK(BM_Afun);

void BM_AfunTanForm(benchmark::State& state) {
  CounterRng rng(1);
  std::vector<double> xs(4096);
  for (auto& x : xs) x = 10 * rng.normal();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(afun_tan_form(xs[i & 4095], xs[(i + 1) & 4095]));
    ++i;
  }
}
BENCHMARK(BM_AfunTanForm);

Instance bench_instance(std::size_t m, std::size_t n, double l1) {
  CounterRng rng(7);
  return sample_instance(m, n, l1, 1.0, rng);
}

void BM_ElasticNetSpecularGradient(benchmark::State& state) {
  const auto inst = bench_instance(static_cast<std::size_t>(state.range(0)), 100, 1.0);
  const ElasticNetObjective f(inst.problem);
  Vector x = inst.x0;
  for (Eigen::Index i = 0; i < x.size(); i += 3) x[i] = 0.0;
  for (auto _ : state) benchmark::DoNotOptimize(specular_gradient(f, x));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ElasticNetSpecularGradient)->Arg(50)->Arg(500);

void BM_SpegIteration(benchmark::State& state) {
  const auto inst = bench_instance(500, 100, 100.0);
  const ElasticNetObjective f(inst.problem);
  const auto sched = StepSchedule::normalized_diminishing(4.0);
  for (auto _ : state) benchmark::DoNotOptimize(speg_run(f, inst.x0, sched, {100, 1e-12}));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_SpegIteration)->Unit(benchmark::kMillisecond);

void BM_SSpegIteration(benchmark::State& state) {
  const auto inst = bench_instance(500, 100, 100.0);
  const ElasticNetObjective f(inst.problem);
  const auto comps = elastic_net_components(inst.problem);
  const auto sched = StepSchedule::normalized_diminishing(4.0);
  CounterRng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(sspeg_run(f, comps, inst.x0, sched, {100, 1e-12}, rng));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_SSpegIteration)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
