#pragma once

#include "icurve/inference/hypothesis.hpp"
#include "icurve/inference/ks.hpp"
#include "icurve/sim/scenario.hpp"

#include <optional>
#include <vector>

namespace icurve {

struct Histogram
{
  double lower = 0.0;
  double upper = 0.0;
  std::vector<std::size_t> counts;

  //! Equal-width bins over [min, max] of the samples.
  static Histogram build(const std::vector<double>& samples, std::size_t bins);
  double bin_width() const;
  std::size_t total() const;
};

struct StudyResult
{
  std::size_t replications = 0;
  //! Per-replication statistic in replication order (failed replications omitted).
  std::vector<double> statistics;
  //! Replications where tracking or the statistic was undefined.
  std::size_t failures = 0;
  std::optional<KsResult> ks;
  Histogram histogram;

  // Power studies only, one entry per target.
  std::vector<Vector> targets;
  std::vector<double> target_distance;  // D from the reference curve
  std::vector<double> empirical_power;
  std::vector<double> theoretical_power;
};

//! Monte Carlo law of the minimal squared distance. Each replication draws
//! fresh observations, tracks, and records either the standardized
//! sqrt(n h^(d-1)) (D_hat^2 - D2_true - bias) / sigma_hat (normal regime,
//! bias from track_cfg.bandwidth.beta) or the raw n h^(d-1) D_hat^2. The KS
//! test against the standard normal is run when standardizing.
StudyResult mc_distance_study(const SyntheticScenario& sc, const TrackConfig& track_cfg,
                              const Target& target, double d2_true, std::size_t replications,
                              bool standardize);

//! Empirical rejection frequency of the point-reach test per target, with
//! the asymptotic power evaluated on the reference curve of the true field.
StudyResult mc_power_study(const SyntheticScenario& sc, const TrackConfig& track_cfg,
                           const std::vector<Vector>& targets, double alpha,
                           std::size_t replications, const LimitLawConfig& law);

}  // namespace icurve
