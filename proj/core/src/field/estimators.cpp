#include "icurve/field/estimators.hpp"

#include "icurve/field/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace icurve {

void EstimatorConfig::validate() const
{
  if (!(h > 0.0) || !std::isfinite(h))
    throw std::invalid_argument("EstimatorConfig: bandwidth h must be positive");
  if (!(h_tilde > 0.0) || !std::isfinite(h_tilde))
    throw std::invalid_argument("EstimatorConfig: bandwidth h_tilde must be positive");
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("EstimatorConfig: beta must be nonnegative");
}

FieldEstimator::FieldEstimator(const ObservationSet& obs, EstimatorConfig cfg)
    : obs_(&obs), cfg_(cfg)
{
  cfg_.validate();
}

namespace {

struct KernelSums
{
  Vector value;
  Matrix jacobian;
};

// One pass over the observations accumulating sum K(u_i) V_i and
// sum K(u_i) V_i u_i^T with u_i = (x - X_i) / h.
KernelSums accumulate(const ObservationSet& obs, double h, const Vector& x, bool with_jacobian)
{
  const int d = obs.dim();
  if (x.size() != d)
    throw std::invalid_argument("estimator: evaluation point has the wrong dimension");
  const Eigen::Index n = obs.size();
  const double* pts = obs.points().data();
  const double* vals = obs.values().data();
  const double inv_h = 1.0 / h;

  KernelSums sums{Vector::Zero(d), Matrix::Zero(d, with_jacobian ? d : 0)};
  Eigen::VectorXd u(d);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double* p = pts + i * d;
    const double* v = vals + i * d;
    double r2 = 0.0;
    for (int j = 0; j < d; ++j) {
      u[j] = (x[j] - p[j]) * inv_h;
      r2 += u[j] * u[j];
    }
    const double w = std::exp(-0.5 * r2);
    for (int l = 0; l < d; ++l)
      sums.value[l] += w * v[l];
    if (with_jacobian) {
      for (int k = 0; k < d; ++k) {
        const double wu = w * u[k];
        for (int l = 0; l < d; ++l)
          sums.jacobian(l, k) += wu * v[l];
      }
    }
  }
  return sums;
}

double value_scale(const ObservationSet& obs, double h)
{
  const int d = obs.dim();
  return obs.domain().volume() * GaussianKernel::normalization(d) /
         (static_cast<double>(obs.size()) * std::pow(h, d));
}

}  // namespace

Vector FieldEstimator::value(const Vector& x) const
{
  return value_scale(*obs_, cfg_.h) * accumulate(*obs_, cfg_.h, x, false).value;
}

Matrix FieldEstimator::jacobian(const Vector& x) const
{
  return evaluate(x).jacobian;
}

FieldEstimate FieldEstimator::evaluate(const Vector& x, bool with_w_term) const
{
  const double scale = value_scale(*obs_, cfg_.h);
  KernelSums sums = accumulate(*obs_, cfg_.h, x, true);
  FieldEstimate out;
  out.value = scale * sums.value;
  // grad K(u) = -u K(u), and d/dx carries an extra 1/h.
  out.jacobian = (-scale / cfg_.h) * sums.jacobian;
  if (with_w_term)
    out.w_term = w_term(x);
  return out;
}

Vector FieldEstimator::w_term(const Vector& x) const
{
  const int d = obs_->dim();
  if (x.size() != d)
    throw std::invalid_argument("nw_w_term: evaluation point has the wrong dimension");
  const Eigen::Index n = obs_->size();
  const double* pts = obs_->points().data();
  const double* vals = obs_->values().data();
  const double ht = cfg_.h_tilde;
  const double inv_h = 1.0 / ht;

  // Trace of the Gaussian Hessian: (|u|^2 - d) K(u).
  Vector acc = Vector::Zero(d);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double* p = pts + i * d;
    const double* v = vals + i * d;
    double r2 = 0.0;
    for (int j = 0; j < d; ++j) {
      const double u = (x[j] - p[j]) * inv_h;
      r2 += u * u;
    }
    const double w = (r2 - d) * std::exp(-0.5 * r2);
    for (int l = 0; l < d; ++l)
      acc[l] += w * v[l];
  }
  const double scale = obs_->domain().volume() * GaussianKernel::normalization(d) /
                       (static_cast<double>(n) * std::pow(ht, d + 2));
  return scale * acc;
}

Matrix FieldEstimator::noise_covariance() const
{
  const Eigen::Index n = obs_->size();
  if (n < 2)
    throw std::invalid_argument("noise_cov_estimate: need at least two observations");
  const int d = obs_->dim();
  Matrix sigma = Matrix::Zero(d, d);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Vector r = obs_->values().col(j) - value(obs_->points().col(j));
    sigma.noalias() += r * r.transpose();
  }
  sigma /= static_cast<double>(n);
  return 0.5 * (sigma + sigma.transpose());
}

Vector nw_estimate(const ObservationSet& obs, const EstimatorConfig& cfg, const Vector& x)
{
  return FieldEstimator(obs, cfg).value(x);
}

Matrix nw_jacobian(const ObservationSet& obs, const EstimatorConfig& cfg, const Vector& x)
{
  return FieldEstimator(obs, cfg).jacobian(x);
}

Vector nw_w_term(const ObservationSet& obs, const EstimatorConfig& cfg, const Vector& x)
{
  return FieldEstimator(obs, cfg).w_term(x);
}

Matrix noise_cov_estimate(const ObservationSet& obs, const EstimatorConfig& cfg)
{
  return FieldEstimator(obs, cfg).noise_covariance();
}

}  // namespace icurve
