#pragma once

#include "icurve/field/observation_set.hpp"
#include "icurve/tracker/tracker.hpp"

#include <cstdint>

namespace icurve {

//! Uniform design on a box with additive Gaussian noise around a known
//! field: V_i = v(X_i) + noise_scale * Z_i.
struct SyntheticScenario
{
  AnalyticField field;
  Box domain;
  Eigen::Index n = 0;
  double noise_scale = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
  double effective_size() const { return static_cast<double>(n) / domain.volume(); }
};

//! Observations for one replication; (seed, replication) fixes every draw.
ObservationSet sample_observations(const SyntheticScenario& sc, std::uint64_t replication = 0);

//! Two fibres crossing at the origin in the plane: the unit field e_1
//! everywhere, and inside the band |x_1| < band_half_width each observation
//! follows the unit field e_2 instead with probability 1/2.
struct CrossingScenario
{
  Box domain;
  Eigen::Index n = 0;
  double noise_scale = 0.0;
  double band_half_width = 0.5;
  std::uint64_t seed = 0;
};

ObservationSet sample_crossing_observations(const CrossingScenario& sc,
                                            std::uint64_t replication = 0);

}  // namespace icurve
