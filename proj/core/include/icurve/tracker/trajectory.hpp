#pragma once

#include "icurve/field/estimators.hpp"

#include <string_view>
#include <vector>

namespace icurve {

struct TrackConfig
{
  Vector x0;
  double horizon = 0.0;      // T
  double step = 0.0;         // delta
  double speed_floor = 0.1;  // stop once |V(X_k)| falls below this
  EstimatorConfig bandwidth;

  //! N = ceil(T / delta)
  int num_steps() const;
  void validate() const;
};

//! One Euler step of the joint recurrence for the curve X_k, the bias
//! coefficient M_k and the covariance C_k, together with the field value at X_k.
struct TrackState
{
  int k = 0;
  double t = 0.0;
  Vector x;
  Vector m;
  Matrix c;
  Vector v;
};

enum class StopReason
{
  horizon,
  low_speed,
  left_domain,
};

std::string_view to_string(StopReason reason);

struct Trajectory
{
  std::vector<TrackState> states;
  StopReason stop_reason = StopReason::horizon;
  TrackConfig config;
  //! Effective sample size n / |G| (or the nominal n of an analytic field).
  double sample_size = 0.0;
  //! Number of steps whose covariance had an eigenvalue below -1e-10 tr(C).
  int psd_warnings = 0;

  bool stopped_early() const { return stop_reason != StopReason::horizon; }
  int dim() const { return states.empty() ? 0 : static_cast<int>(states.front().x.size()); }
  AsymptoticScale scale() const;
};

}  // namespace icurve
