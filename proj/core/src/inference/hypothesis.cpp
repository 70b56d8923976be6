#include "icurve/inference/hypothesis.hpp"

#include "icurve/field/kernel.hpp"
#include "icurve/inference/distributions.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace icurve {

std::string_view to_string(LawKind law)
{
  return law == LawKind::normal ? "normal" : "chi2type";
}

namespace {

void check_alpha(double alpha)
{
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0, 1)");
}

void check_rate(const AsymptoticScale& scale)
{
  if (!(scale.rate() > 0.0) || !std::isfinite(scale.rate()))
    throw std::invalid_argument("n h^(d-1) must be positive");
}

TestReport report_from_samples(const std::vector<double>& sorted, double statistic,
                               const MinDistance& md, const Trajectory& traj, double alpha,
                               const LimitLawConfig& cfg)
{
  TestReport r;
  r.statistic = statistic;
  r.critical_value = upper_quantile(sorted, alpha);
  r.p_value = upper_tail_fraction(sorted, statistic);
  r.reject = statistic >= r.critical_value;
  r.k_hat = md.k;
  r.tau_hat = md.k * traj.config.step;
  r.d2_min = md.value;
  r.law = LawKind::chi2type;
  r.alpha = alpha;
  r.seed = cfg.seed;
  r.draws = cfg.draws;
  return r;
}

}  // namespace

TestReport test_point_reach(const Trajectory& traj, const Vector& a, double alpha,
                            const AsymptoticScale& scale, const LimitLawConfig& cfg)
{
  check_alpha(alpha);
  check_rate(scale);
  cfg.validate();
  const MinDistance md = min_sq_distance(traj, PointTarget{a});
  const TrackState& s = traj.states[static_cast<std::size_t>(md.k)];
  const std::vector<double> law = sample_chi2type_law(s.m, s.c, s.v, cfg);
  return report_from_samples(law, scale.rate() * md.value, md, traj, alpha, cfg);
}

TestReport test_point_reach(const Trajectory& traj, const Vector& a, double alpha,
                            const LimitLawConfig& cfg)
{
  return test_point_reach(traj, a, alpha, traj.scale(), cfg);
}

NormalDistanceResult ci_distance_normal(const Trajectory& traj, const Target& target,
                                        double d2_null, double alpha, const AsymptoticScale& scale,
                                        double beta)
{
  check_alpha(alpha);
  check_rate(scale);
  if (std::holds_alternative<FunctionalTarget>(target))
    throw std::invalid_argument("ci_distance_normal: needs a point or sphere target");

  const MinDistance md = min_sq_distance(traj, target);
  const TrackState& s = traj.states[static_cast<std::size_t>(md.k)];
  Vector center;
  double radius = 0.0;
  if (const auto* p = std::get_if<PointTarget>(&target)) {
    center = p->center;
  } else {
    const auto& sphere = std::get<SphereTarget>(target);
    center = sphere.center;
    radius = sphere.radius;
  }

  NormalDistanceResult out;
  out.d2_hat = md.value;
  out.k_hat = md.k;

  const Vector offset = s.x - center;
  const double dist = offset.norm();
  const double sqrt_rate = std::sqrt(scale.rate());
  if (dist > 0.0) {
    // Signed gap to the target surface; the gradient of the squared
    // distance is 2 gap n.
    const double gap = dist - radius;
    const Vector normal = offset / dist;
    const Vector grad = 2.0 * gap * normal;
    out.sigma_hat = std::sqrt(std::max(grad.dot(s.c * grad), 0.0));
    out.bias = std::sqrt(beta) * grad.dot(s.m) / sqrt_rate;
  }
  const double centered = out.d2_hat - out.bias;
  out.degenerate = !(out.sigma_hat > 0.0);
  if (out.degenerate) {
    out.ci = {centered, centered};
    return out;
  }
  out.z = sqrt_rate * (centered - d2_null) / out.sigma_hat;
  const double half = normal_quantile(1.0 - 0.5 * alpha) * out.sigma_hat / sqrt_rate;
  out.ci = {centered - half, centered + half};
  return out;
}

TestReport test_functional_min(const Trajectory& traj, const FunctionalTarget& f, double inf_null,
                               double alpha, const AsymptoticScale& scale,
                               const LimitLawConfig& cfg, const FunctionalTestOptions& opts)
{
  check_alpha(alpha);
  check_rate(scale);
  cfg.validate();
  if (!f.phi || !f.gradient || !f.hessian)
    throw std::invalid_argument("test_functional_min: phi, gradient and hessian are required");

  const MinDistance md = min_sq_distance(traj, Target{f});
  const TrackState& s = traj.states[static_cast<std::size_t>(md.k)];
  const double rate = scale.rate();
  const Vector grad = f.gradient(s.x);
  const Matrix hess = f.hessian(s.x);

  const double noise = std::sqrt(std::max((hess * s.c * hess).trace(), 0.0) / rate);
  const double ratio = noise > 0.0 ? grad.norm() / noise
                                   : (grad.norm() > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  Regime regime = opts.regime;
  bool uncertain = false;
  if (regime == Regime::automatic) {
    regime = ratio < opts.switch_at ? Regime::chi2type : Regime::normal;
    uncertain = ratio >= opts.band_low && ratio <= opts.band_high;
  }

  if (regime == Regime::chi2type) {
    const std::vector<double> law = sample_quadratic_law(hess, s.m, s.c, s.v, cfg);
    TestReport r = report_from_samples(law, rate * (md.value - inf_null), md, traj, alpha, cfg);
    r.regime_uncertain = uncertain;
    return r;
  }

  const double sigma = std::sqrt(std::max(grad.dot(s.c * grad), 0.0));
  if (!(sigma > 0.0))
    throw std::domain_error("test_functional_min: degenerate normal law (zero variance)");
  TestReport r;
  r.statistic = (std::sqrt(rate) * (md.value - inf_null) - std::sqrt(cfg.beta) * s.m.dot(grad)) / sigma;
  r.critical_value = normal_quantile(1.0 - alpha);
  r.p_value = 1.0 - normal_cdf(r.statistic);
  r.reject = r.statistic >= r.critical_value;
  r.k_hat = md.k;
  r.tau_hat = md.k * traj.config.step;
  r.d2_min = md.value;
  r.law = LawKind::normal;
  r.alpha = alpha;
  r.seed = cfg.seed;
  r.draws = 0;
  r.regime_uncertain = uncertain;
  return r;
}

double power_theoretical(double distance, double critical_value, const AsymptoticScale& scale,
                         double beta, const Vector& m_hat, const Matrix& c_hat,
                         const Vector& normal_hat)
{
  if (!(distance > 0.0))
    throw std::domain_error("power_theoretical: distance must be positive");
  check_rate(scale);
  const double nn = normal_hat.dot(c_hat * normal_hat);
  if (!(nn > 0.0))
    throw std::domain_error("power_theoretical: zero variance along the normal");
  const double sqrt_rate = std::sqrt(scale.rate());
  const double numer = critical_value / sqrt_rate - sqrt_rate * distance * distance -
                       2.0 * std::sqrt(beta) * distance * m_hat.dot(normal_hat);
  const double arg = numer / (2.0 * distance * std::sqrt(nn));
  return 1.0 - normal_cdf(arg);
}

std::vector<PValuePoint> pvalue_map(const Trajectory& traj, const std::vector<Vector>& grid,
                                    double alpha, const AsymptoticScale& scale,
                                    const LimitLawConfig& cfg)
{
  check_alpha(alpha);
  check_rate(scale);
  cfg.validate();
  if (grid.empty())
    throw std::invalid_argument("pvalue_map: empty grid");

  std::map<int, std::vector<double>> laws;
  std::vector<PValuePoint> out;
  out.reserve(grid.size());
  for (const Vector& a : grid) {
    const MinDistance md = min_sq_distance(traj, PointTarget{a});
    auto it = laws.find(md.k);
    if (it == laws.end()) {
      const TrackState& s = traj.states[static_cast<std::size_t>(md.k)];
      it = laws.emplace(md.k, sample_chi2type_law(s.m, s.c, s.v, cfg)).first;
    }
    out.push_back({a, upper_tail_fraction(it->second, scale.rate() * md.value)});
  }
  return out;
}

double branching_variance(const Vector& v, const Matrix& sigma)
{
  const int d = static_cast<int>(v.size());
  return 4.0 * GaussianKernel::square_integral(d) * (1.0 + v.dot(sigma * v));
}

BranchingResult branching_statistic(const ObservationSet& obs, const EstimatorConfig& cfg,
                                    const Vector& x, const std::optional<Matrix>& sigma_hat)
{
  const FieldEstimator est(obs, cfg);
  const Vector v = est.value(x);
  const Matrix sigma = sigma_hat ? *sigma_hat : est.noise_covariance();

  BranchingResult out;
  out.speed2 = v.squaredNorm();
  out.sigma2_hat = branching_variance(v, sigma);
  const double scale = std::sqrt(obs.effective_size() * std::pow(cfg.h, obs.dim()));
  out.nu = scale * (out.speed2 - 1.0) / std::sqrt(out.sigma2_hat);

  out.unit_norm_caveat = true;
  for (Eigen::Index i = 0; i < obs.size(); ++i) {
    if (std::abs(obs.values().col(i).norm() - 1.0) > 1e-9) {
      out.unit_norm_caveat = false;
      break;
    }
  }
  return out;
}

}  // namespace icurve
