#include "icurve/tracker/tracker.hpp"

#include <Eigen/Eigenvalues>

namespace icurve {

int TrackConfig::num_steps() const
{
  return static_cast<int>(std::ceil(horizon / step - 1e-12));
}

void TrackConfig::validate() const
{
  if (x0.size() < 2 || !x0.allFinite())
    throw std::invalid_argument("TrackConfig: start point must be a finite vector of dimension >= 2");
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    throw std::invalid_argument("TrackConfig: horizon T must be positive");
  if (!(step > 0.0) || !(step < horizon))
    throw std::invalid_argument("TrackConfig: step must satisfy 0 < delta < T");
  if (!(speed_floor > 0.0))
    throw std::invalid_argument("TrackConfig: speed floor must be positive");
  bandwidth.validate();
}

std::string_view to_string(StopReason reason)
{
  switch (reason) {
    case StopReason::horizon: return "horizon";
    case StopReason::low_speed: return "low_speed";
    case StopReason::left_domain: return "left_domain";
  }
  return "unknown";
}

AsymptoticScale Trajectory::scale() const
{
  return AsymptoticScale{sample_size, config.bandwidth.h, dim()};
}

namespace detail {

bool psd_violation(const Matrix& c)
{
  Eigen::SelfAdjointEigenSolver<Matrix> eig(c, Eigen::EigenvaluesOnly);
  const double tol = 1e-10 * std::max(std::abs(c.trace()), 1e-300);
  return eig.eigenvalues().minCoeff() < -tol;
}

}  // namespace detail

NwFieldModel::NwFieldModel(const ObservationSet& obs, const EstimatorConfig& cfg)
    : estimator_(obs, cfg), sigma_(estimator_.noise_covariance())
{}

AnalyticFieldModel::AnalyticFieldModel(const AnalyticField& field) : field_(&field)
{
  if (!field.v || !field.v_prime || !field.v_second)
    throw std::invalid_argument("AnalyticField: v, v_prime and v_second are required");
  if (field.sigma.rows() != field.dim || field.sigma.cols() != field.dim)
    throw std::invalid_argument("AnalyticField: sigma must be d x d");
}

FieldEstimate AnalyticFieldModel::evaluate(const Vector& x) const
{
  FieldEstimate out;
  out.value = field_->v(x);
  out.jacobian = field_->v_prime(x);
  const std::vector<Matrix> hess = field_->v_second(x);
  Vector w(field_->dim);
  for (int l = 0; l < field_->dim; ++l)
    w[l] = hess[static_cast<std::size_t>(l)].trace();
  out.w_term = std::move(w);
  return out;
}

Trajectory track_curve(const ObservationSet& obs, const TrackConfig& cfg)
{
  cfg.validate();
  if (!obs.domain().contains(cfg.x0))
    throw std::invalid_argument("track_curve: start point lies outside the domain");
  NwFieldModel model(obs, cfg.bandwidth);
  return track_model(model, cfg, obs.domain().inflated(2.0 * cfg.bandwidth.h),
                     obs.effective_size());
}

Trajectory track_reference(const AnalyticField& field, const TrackConfig& cfg, double sample_size)
{
  AnalyticFieldModel model(field);
  return track_model(model, cfg, std::nullopt, sample_size);
}

}  // namespace icurve
