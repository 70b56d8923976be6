#include "icurve/sim/scenario.hpp"

#include "icurve/sim/rng.hpp"

#include <stdexcept>

namespace icurve {

namespace {

constexpr std::uint32_t kDesignPurpose = 0x01;

Vector uniform_point(CounterRng& rng, const Box& box)
{
  Vector x(box.dim());
  for (int j = 0; j < box.dim(); ++j)
    x[j] = rng.uniform(box.lower[j], box.upper[j]);
  return x;
}

}  // namespace

void SyntheticScenario::validate() const
{
  if (n < 1)
    throw std::invalid_argument("SyntheticScenario: n must be at least 1");
  if (!(noise_scale >= 0.0))
    throw std::invalid_argument("SyntheticScenario: noise scale must be nonnegative");
  if (!field.v)
    throw std::invalid_argument("SyntheticScenario: field is missing");
  if (domain.dim() != field.dim)
    throw std::invalid_argument("SyntheticScenario: domain and field dimensions differ");
}

ObservationSet sample_observations(const SyntheticScenario& sc, std::uint64_t replication)
{
  sc.validate();
  const int d = sc.field.dim;
  CounterRng rng(sc.seed, substream(replication, kDesignPurpose));
  Matrix points(d, sc.n);
  Matrix values(d, sc.n);
  for (Eigen::Index i = 0; i < sc.n; ++i) {
    points.col(i) = uniform_point(rng, sc.domain);
    Vector v = sc.field.v(points.col(i));
    for (int j = 0; j < d; ++j)
      v[j] += sc.noise_scale * rng.normal();
    values.col(i) = v;
  }
  return ObservationSet(std::move(points), std::move(values), sc.domain);
}

ObservationSet sample_crossing_observations(const CrossingScenario& sc, std::uint64_t replication)
{
  if (sc.n < 1 || sc.domain.dim() != 2)
    throw std::invalid_argument("CrossingScenario: need n >= 1 in a planar domain");
  CounterRng rng(sc.seed, substream(replication, kDesignPurpose));
  Matrix points(2, sc.n);
  Matrix values(2, sc.n);
  for (Eigen::Index i = 0; i < sc.n; ++i) {
    const Vector x = uniform_point(rng, sc.domain);
    Vector v{{1.0, 0.0}};
    const double coin = rng.uniform();
    if (std::abs(x[0]) < sc.band_half_width && coin < 0.5)
      v = Vector{{0.0, 1.0}};
    v[0] += sc.noise_scale * rng.normal();
    v[1] += sc.noise_scale * rng.normal();
    points.col(i) = x;
    values.col(i) = v;
  }
  return ObservationSet(std::move(points), std::move(values), sc.domain);
}

}  // namespace icurve
