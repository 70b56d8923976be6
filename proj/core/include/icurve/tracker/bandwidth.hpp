#pragma once

#include "icurve/tracker/trajectory.hpp"

#include <optional>

namespace icurve {

//! A * beta^(-(d-1)/(d+3)) + B * beta^(4/(d+3)): the mean integrated squared
//! error of the curve estimate up to the common factor n^(-4/(d+3)).
double mise_objective(double variance_weight, double bias_weight, double beta, int dim);

//! Closed-form minimizer (d-1) A / (4 B); empty when B = 0 (no finite minimizer).
std::optional<double> mise_minimizer(double variance_weight, double bias_weight, int dim);

struct BandwidthSelection
{
  double variance_weight = 0.0;  // A = int_0^T tr C(t) dt
  double bias_weight = 0.0;      // B = int_0^T |M(t)|^2 dt
  std::optional<double> beta;    // global optimum, empty if unbounded

  // Distance-to-target variant, present when a target point was given.
  std::optional<double> local_variance_weight;  // 4 (x(tau) - a)^T C(tau) (x(tau) - a)
  std::optional<double> local_bias_weight;      // 4 (M(tau)^T (x(tau) - a))^2
  std::optional<double> local_beta;
  int tau_index = -1;
};

//! Bandwidth constant beta minimizing the asymptotic MISE, computed from a
//! reference trajectory (trapezoidal rule over its states). h then follows
//! from h = (beta / n)^(1/(d+3)).
BandwidthSelection select_bandwidth_mise(const Trajectory& reference,
                                         const std::optional<Vector>& target = std::nullopt);

//! h = (beta / n)^(1/(d+3))
double bandwidth_for_beta(double beta, double n, int dim);

}  // namespace icurve
