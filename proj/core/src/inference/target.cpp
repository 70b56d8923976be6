#include "icurve/inference/target.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace icurve {

namespace {

template <class... Ts>
struct overloaded : Ts...
{
  using Ts::operator()...;
};

}  // namespace

double target_value(const Target& target, const Vector& x)
{
  return std::visit(overloaded{
                        [&](const PointTarget& p) { return (x - p.center).squaredNorm(); },
                        [&](const SphereTarget& s) {
                          const double gap = (x - s.center).norm() - s.radius;
                          return gap * gap;
                        },
                        [&](const FunctionalTarget& f) { return f.phi(x); },
                    },
                    target);
}

MinDistance min_sq_distance(const Trajectory& traj, const Target& target)
{
  if (traj.states.empty())
    throw std::invalid_argument("min_sq_distance: empty trajectory");
  if (const auto* s = std::get_if<SphereTarget>(&target); s && !(s->radius > 0.0))
    throw std::invalid_argument("min_sq_distance: sphere radius must be positive");
  if (const auto* f = std::get_if<FunctionalTarget>(&target); f && !f->phi)
    throw std::invalid_argument("min_sq_distance: functional target without phi");

  MinDistance best{std::numeric_limits<double>::infinity(), 0};
  for (const TrackState& state : traj.states) {
    const double value = target_value(target, state.x);
    if (!std::isfinite(value))
      throw std::domain_error("min_sq_distance: target functional is not finite at step " +
                              std::to_string(state.k));
    if (value < best.value) {
      best.value = value;
      best.k = state.k;
    }
  }
  return best;
}

}  // namespace icurve
