#include "icurve/sim/studies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace icurve {

Histogram Histogram::build(const std::vector<double>& samples, std::size_t bins)
{
  if (samples.empty() || bins == 0)
    throw std::invalid_argument("Histogram: need samples and at least one bin");
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  Histogram h;
  h.lower = *lo;
  h.upper = *hi > *lo ? *hi : *lo + 1.0;
  h.counts.assign(bins, 0);
  const double width = (h.upper - h.lower) / static_cast<double>(bins);
  for (double x : samples) {
    auto idx = static_cast<std::size_t>((x - h.lower) / width);
    ++h.counts[std::min(idx, bins - 1)];
  }
  return h;
}

double Histogram::bin_width() const
{
  return counts.empty() ? 0.0 : (upper - lower) / static_cast<double>(counts.size());
}

std::size_t Histogram::total() const
{
  std::size_t sum = 0;
  for (std::size_t c : counts)
    sum += c;
  return sum;
}

namespace {

void check_replications(std::size_t n)
{
  if (n < 100)
    throw std::invalid_argument("Monte Carlo study: need at least 100 replications");
}

std::size_t histogram_bins(std::size_t n)
{
  return std::clamp<std::size_t>(static_cast<std::size_t>(2.0 * std::cbrt(static_cast<double>(n))),
                                 5, 60);
}

}  // namespace

StudyResult mc_distance_study(const SyntheticScenario& sc, const TrackConfig& track_cfg,
                              const Target& target, double d2_true, std::size_t replications,
                              bool standardize)
{
  check_replications(replications);
  sc.validate();
  track_cfg.validate();

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> per_rep(replications, nan);
  const double beta = track_cfg.bandwidth.beta;

#pragma omp parallel for schedule(dynamic)
  for (long r = 0; r < static_cast<long>(replications); ++r) {
    try {
      const ObservationSet obs = sample_observations(sc, static_cast<std::uint64_t>(r));
      const Trajectory traj = track_curve(obs, track_cfg);
      const AsymptoticScale scale = traj.scale();
      if (standardize) {
        const NormalDistanceResult res = ci_distance_normal(traj, target, d2_true, 0.05, scale, beta);
        if (res.z)
          per_rep[static_cast<std::size_t>(r)] = *res.z;
      } else {
        per_rep[static_cast<std::size_t>(r)] = scale.rate() * min_sq_distance(traj, target).value;
      }
    } catch (const std::exception&) {
      // counted as a failure below
    }
  }

  StudyResult out;
  out.replications = replications;
  for (double x : per_rep) {
    if (std::isfinite(x))
      out.statistics.push_back(x);
    else
      ++out.failures;
  }
  if (out.statistics.empty())
    throw std::runtime_error("mc_distance_study: every replication failed");
  if (standardize && out.statistics.size() >= 10)
    out.ks = ks_test_normal(out.statistics);
  out.histogram = Histogram::build(out.statistics, histogram_bins(out.statistics.size()));
  return out;
}

StudyResult mc_power_study(const SyntheticScenario& sc, const TrackConfig& track_cfg,
                           const std::vector<Vector>& targets, double alpha,
                           std::size_t replications, const LimitLawConfig& law)
{
  check_replications(replications);
  if (targets.empty())
    throw std::invalid_argument("mc_power_study: no targets");
  sc.validate();
  track_cfg.validate();
  law.validate();

  const std::size_t n_targets = targets.size();
  // 1 = reject, 0 = accept, -1 = failed replication
  std::vector<int> decisions(replications * n_targets, -1);

#pragma omp parallel for schedule(dynamic)
  for (long r = 0; r < static_cast<long>(replications); ++r) {
    try {
      const ObservationSet obs = sample_observations(sc, static_cast<std::uint64_t>(r));
      const Trajectory traj = track_curve(obs, track_cfg);
      for (std::size_t j = 0; j < n_targets; ++j) {
        LimitLawConfig cfg = law;
        cfg.seed = derive_seed(law.seed, static_cast<std::uint64_t>(r) * n_targets + j);
        const TestReport rep = test_point_reach(traj, targets[j], alpha, cfg);
        decisions[static_cast<std::size_t>(r) * n_targets + j] = rep.reject ? 1 : 0;
      }
    } catch (const std::exception&) {
    }
  }

  StudyResult out;
  out.replications = replications;
  out.targets = targets;
  std::vector<std::size_t> rejects(n_targets, 0);
  std::vector<std::size_t> valid(n_targets, 0);
  for (std::size_t r = 0; r < replications; ++r) {
    bool failed = false;
    for (std::size_t j = 0; j < n_targets; ++j) {
      const int dec = decisions[r * n_targets + j];
      if (dec < 0) {
        failed = true;
        continue;
      }
      ++valid[j];
      rejects[j] += static_cast<std::size_t>(dec);
    }
    if (failed)
      ++out.failures;
  }

  const Trajectory reference = track_reference(sc.field, track_cfg, sc.effective_size());
  const AsymptoticScale scale = reference.scale();
  for (std::size_t j = 0; j < n_targets; ++j) {
    out.empirical_power.push_back(valid[j] ? static_cast<double>(rejects[j]) / valid[j] : 0.0);
    out.statistics.push_back(out.empirical_power.back());

    const MinDistance md = min_sq_distance(reference, PointTarget{targets[j]});
    const TrackState& s = reference.states[static_cast<std::size_t>(md.k)];
    const double distance = std::sqrt(md.value);
    out.target_distance.push_back(distance);
    if (distance < 1e-9) {
      out.theoretical_power.push_back(alpha);
      continue;
    }
    LimitLawConfig cfg = law;
    cfg.seed = derive_seed(law.seed, 0xfffffffful + j);
    const double crit = upper_quantile(sample_chi2type_law(s.m, s.c, s.v, cfg), alpha);
    const Vector normal = (s.x - targets[j]) / (s.x - targets[j]).norm();
    out.theoretical_power.push_back(power_theoretical(distance, crit, scale,
                                                      track_cfg.bandwidth.beta, s.m, s.c, normal));
  }
  out.histogram = Histogram::build(out.empirical_power, std::min<std::size_t>(n_targets, 10));
  return out;
}

}  // namespace icurve
