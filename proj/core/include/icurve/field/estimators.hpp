#pragma once

#include "icurve/field/observation_set.hpp"

#include <optional>

namespace icurve {

//! Bandwidths of the field estimators.
//!
//! `h` smooths the field and its Jacobian, `h_tilde` the second-derivative
//! term. `beta` is the constant of the calibration h = (beta / n)^(1/(d+3));
//! zero drops the bias term from every limit law.
struct EstimatorConfig
{
  double h = 0.0;
  double h_tilde = 0.0;
  double beta = 0.0;

  void validate() const;
};

struct FieldEstimate
{
  Vector value;
  Matrix jacobian;
  std::optional<Vector> w_term;
};

//! Kernel estimators of v, v' and of the bias forcing term
//! W(x) = int K(z) <V''(x) z, z> dz from an ObservationSet.
//!
//! With a uniform design on the domain G the estimator needs no density
//! denominator:
//!   V(x)  = |G| / (n h^d)     sum_i K((x - X_i)/h) V_i
//!   V'(x) = |G| / (n h^(d+1)) sum_i V_i grad K((x - X_i)/h)^T
//!   W(x)  = |G| / (n ht^(d+2)) sum_i (|u_i|^2 - d) K(u_i) V_i,  u_i = (x - X_i)/ht
//! Sums run over all observations. The estimator is a cheap view; it keeps
//! a reference to the observations, which must outlive it.
class FieldEstimator
{
public:
  FieldEstimator(const ObservationSet& obs, EstimatorConfig cfg);

  const ObservationSet& observations() const { return *obs_; }
  const EstimatorConfig& config() const { return cfg_; }

  Vector value(const Vector& x) const;
  Matrix jacobian(const Vector& x) const;
  Vector w_term(const Vector& x) const;

  //! Value and Jacobian from a single pass over the observations.
  FieldEstimate evaluate(const Vector& x, bool with_w_term = false) const;

  //! Sigma_hat = n^-1 sum_j (V_j - V(X_j)) (V_j - V(X_j))^T.
  Matrix noise_covariance() const;

private:
  const ObservationSet* obs_;
  EstimatorConfig cfg_;
};

Vector nw_estimate(const ObservationSet& obs, const EstimatorConfig& cfg, const Vector& x);
Matrix nw_jacobian(const ObservationSet& obs, const EstimatorConfig& cfg, const Vector& x);
Vector nw_w_term(const ObservationSet& obs, const EstimatorConfig& cfg, const Vector& x);
Matrix noise_cov_estimate(const ObservationSet& obs, const EstimatorConfig& cfg);

}  // namespace icurve
