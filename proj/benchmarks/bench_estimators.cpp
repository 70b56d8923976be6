#include "icurve/field/estimators.hpp"
#include "icurve/sim/fields.hpp"
#include "icurve/sim/scenario.hpp"

#include <benchmark/benchmark.h>

namespace {

icurve::SyntheticScenario circle(Eigen::Index n)
{
  icurve::SyntheticScenario sc;
  sc.field = icurve::make_circular_field(0.5);
  sc.domain = icurve::Box::centered(2, 2.0);
  sc.n = n;
  sc.noise_scale = 0.5;
  sc.seed = 7;
  return sc;
}

void BM_Evaluate(benchmark::State& state)
{
  const auto obs = icurve::sample_observations(circle(state.range(0)));
  const icurve::FieldEstimator est(obs, {0.5, 0.5, 1.0});
  const icurve::Vector x{{0.7, 0.4}};
  for (auto _ : state)
    benchmark::DoNotOptimize(est.evaluate(x, true));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Evaluate)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oN);

void BM_NoiseCovariance(benchmark::State& state)
{
  const auto obs = icurve::sample_observations(circle(state.range(0)));
  const icurve::FieldEstimator est(obs, {0.5, 0.5, 1.0});
  for (auto _ : state)
    benchmark::DoNotOptimize(est.noise_covariance());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NoiseCovariance)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oNSquared);

}  // namespace
