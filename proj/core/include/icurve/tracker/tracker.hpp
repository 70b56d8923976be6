#pragma once

#include "icurve/field/kernel.hpp"
#include "icurve/tracker/trajectory.hpp"

#include <cmath>
#include <concepts>
#include <functional>
#include <optional>
#include <stdexcept>

namespace icurve {

//! A known vector field with its first and second derivatives and the
//! covariance of the observation noise. `v_second(x)[l]` is the Hessian of
//! the l-th component.
struct AnalyticField
{
  int dim = 2;
  std::function<Vector(const Vector&)> v;
  std::function<Matrix(const Vector&)> v_prime;
  std::function<std::vector<Matrix>(const Vector&)> v_second;
  Matrix sigma;
};

//! Anything that can drive the tracking recurrences: the field, its
//! Jacobian and the bias forcing term int K(z) <v''(x) z, z> dz at a point,
//! and a noise covariance.
template <class T>
concept FieldModel = requires(const T& model, const Vector& x) {
  { model.dim() } -> std::convertible_to<int>;
  { model.evaluate(x) } -> std::same_as<FieldEstimate>;
  { model.noise_covariance() } -> std::convertible_to<Matrix>;
};

//! Kernel estimates from data. Sigma_hat is computed once at construction.
class NwFieldModel
{
public:
  NwFieldModel(const ObservationSet& obs, const EstimatorConfig& cfg);

  int dim() const { return estimator_.observations().dim(); }
  FieldEstimate evaluate(const Vector& x) const { return estimator_.evaluate(x, true); }
  const Matrix& noise_covariance() const { return sigma_; }

private:
  FieldEstimator estimator_;
  Matrix sigma_;
};

//! True field, derivatives and noise covariance. For the Gaussian kernel
//! int K(z) <v'' z, z> dz is the componentwise Laplacian of v.
class AnalyticFieldModel
{
public:
  explicit AnalyticFieldModel(const AnalyticField& field);

  int dim() const { return field_->dim; }
  FieldEstimate evaluate(const Vector& x) const;
  const Matrix& noise_covariance() const { return field_->sigma; }

private:
  const AnalyticField* field_;
};

namespace detail {
bool psd_violation(const Matrix& c);
}

//! Forward Euler on the three recurrences
//!   X_{k+1} = X_k + delta V(X_k)
//!   C_{k+1} = C_k + delta [psi(V) (Sigma + V V^T) + V' C_k + C_k V'^T]
//!   M_{k+1} = M_k + delta [V' M_k + W / 2]
//! from X_0 = x0, C_0 = 0, M_0 = 0. Stops at the horizon, when |V(X_k)|
//! drops below the speed floor, or when the next point leaves `stop_box`.
template <FieldModel Model>
Trajectory track_model(const Model& model, const TrackConfig& cfg,
                       const std::optional<Box>& stop_box, double sample_size)
{
  cfg.validate();
  const int d = model.dim();
  if (cfg.x0.size() != d)
    throw std::invalid_argument("track: start point has the wrong dimension");
  const Matrix sigma = model.noise_covariance();
  const int n_steps = cfg.num_steps();

  Trajectory traj;
  traj.config = cfg;
  traj.sample_size = sample_size;
  traj.states.reserve(static_cast<std::size_t>(n_steps) + 1);

  TrackState state;
  state.k = 0;
  state.t = 0.0;
  state.x = cfg.x0;
  state.m = Vector::Zero(d);
  state.c = Matrix::Zero(d, d);

  for (;;) {
    FieldEstimate est = model.evaluate(state.x);
    state.v = est.value;
    const int k = state.k;
    traj.states.push_back(state);
    if (k == n_steps) {
      traj.stop_reason = StopReason::horizon;
      break;
    }
    if (est.value.norm() < cfg.speed_floor) {
      traj.stop_reason = StopReason::low_speed;
      break;
    }
    const TrackState& cur = traj.states.back();
    const double dt = cfg.step;
    const Matrix& jac = est.jacobian;
    const Vector& w = *est.w_term;

    TrackState next;
    next.k = k + 1;
    next.t = next.k * dt;
    next.x = cur.x + dt * cur.v;
    if (stop_box && !stop_box->contains(next.x)) {
      traj.stop_reason = StopReason::left_domain;
      break;
    }
    const Matrix forcing = GaussianKernel::psi(cur.v) * (sigma + cur.v * cur.v.transpose());
    Matrix c = cur.c + dt * (forcing + jac * cur.c + cur.c * jac.transpose());
    next.c = 0.5 * (c + c.transpose());
    next.m = cur.m + dt * (jac * cur.m + 0.5 * w);
    if (detail::psd_violation(next.c))
      ++traj.psd_warnings;
    state = std::move(next);
  }
  return traj;
}

//! Tracks the curve of the kernel-estimated field. Stops on leaving the
//! domain inflated by 2h per side.
Trajectory track_curve(const ObservationSet& obs, const TrackConfig& cfg);

//! Ground-truth discretization x(t), M(t), C(t) for a known field.
//! `sample_size` is stored on the trajectory for the asymptotic scalings.
Trajectory track_reference(const AnalyticField& field, const TrackConfig& cfg,
                           double sample_size = 1.0);

}  // namespace icurve
