#include "icurve/inference/limit_law.hpp"
#include "icurve/sim/fields.hpp"
#include "icurve/sim/scenario.hpp"
#include "icurve/tracker/tracker.hpp"

#include <benchmark/benchmark.h>

#include <numbers>

namespace {

void BM_TrackCircle(benchmark::State& state)
{
  icurve::SyntheticScenario sc;
  sc.field = icurve::make_circular_field(0.5);
  sc.domain = icurve::Box::centered(2, 2.0);
  sc.n = state.range(0);
  sc.noise_scale = 0.5;
  sc.seed = 11;
  const auto obs = icurve::sample_observations(sc);

  icurve::TrackConfig cfg;
  cfg.x0 = icurve::Vector{{1.0, 0.0}};
  cfg.horizon = std::numbers::pi;
  cfg.step = 0.02;
  cfg.bandwidth = {0.5, 0.5, 1.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(icurve::track_curve(obs, cfg));
}
BENCHMARK(BM_TrackCircle)->Arg(322)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Chi2TypeLaw(benchmark::State& state)
{
  icurve::LimitLawConfig cfg;
  cfg.draws = static_cast<std::size_t>(state.range(0));
  cfg.seed = 3;
  const icurve::Vector m = icurve::Vector::Zero(2);
  const icurve::Matrix c = icurve::Matrix::Identity(2, 2);
  const icurve::Vector v{{1.0, 0.0}};
  for (auto _ : state)
    benchmark::DoNotOptimize(icurve::sample_chi2type_law(m, c, v, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Chi2TypeLaw)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);

}  // namespace
