#include "icurve/tracker/bandwidth.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace icurve {

double mise_objective(double variance_weight, double bias_weight, double beta, int dim)
{
  const double denom = dim + 3.0;
  return variance_weight * std::pow(beta, -(dim - 1.0) / denom) +
         bias_weight * std::pow(beta, 4.0 / denom);
}

std::optional<double> mise_minimizer(double variance_weight, double bias_weight, int dim)
{
  if (!(bias_weight > 0.0))
    return std::nullopt;
  // The two exponents differ by exactly one, so stationarity is linear in beta.
  return (dim - 1.0) * variance_weight / (4.0 * bias_weight);
}

BandwidthSelection select_bandwidth_mise(const Trajectory& reference,
                                         const std::optional<Vector>& target)
{
  const auto& states = reference.states;
  if (states.empty())
    throw std::invalid_argument("select_bandwidth_mise: empty trajectory");
  const int d = reference.dim();

  BandwidthSelection out;
  for (std::size_t k = 1; k < states.size(); ++k) {
    const double dt = states[k].t - states[k - 1].t;
    out.variance_weight += 0.5 * dt * (states[k].c.trace() + states[k - 1].c.trace());
    out.bias_weight += 0.5 * dt * (states[k].m.squaredNorm() + states[k - 1].m.squaredNorm());
  }
  out.beta = mise_minimizer(out.variance_weight, out.bias_weight, d);

  if (target) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < states.size(); ++k) {
      const double dist2 = (states[k].x - *target).squaredNorm();
      if (dist2 < best) {
        best = dist2;
        out.tau_index = static_cast<int>(k);
      }
    }
    const TrackState& s = states[static_cast<std::size_t>(out.tau_index)];
    const Vector offset = s.x - *target;
    const double proj = s.m.dot(offset);
    out.local_variance_weight = 4.0 * offset.dot(s.c * offset);
    out.local_bias_weight = 4.0 * proj * proj;
    out.local_beta = mise_minimizer(*out.local_variance_weight, *out.local_bias_weight, d);
  }
  return out;
}

double bandwidth_for_beta(double beta, double n, int dim)
{
  if (!(beta > 0.0) || !(n > 0.0))
    throw std::invalid_argument("bandwidth_for_beta: beta and n must be positive");
  return std::pow(beta / n, 1.0 / (dim + 3.0));
}

}  // namespace icurve
