#pragma once

#include "icurve/tracker/trajectory.hpp"

#include <functional>
#include <variant>

namespace icurve {

struct PointTarget
{
  Vector center;
};

struct SphereTarget
{
  Vector center;
  double radius = 0.0;
};

//! Caller-supplied smooth functional phi with gradient and Hessian.
struct FunctionalTarget
{
  std::function<double(const Vector&)> phi;
  std::function<Vector(const Vector&)> gradient;
  std::function<Matrix(const Vector&)> hessian;
};

using Target = std::variant<PointTarget, SphereTarget, FunctionalTarget>;

//! phi(x) for the target: |x - a|^2, (|x - a| - r)^2, or the functional itself.
double target_value(const Target& target, const Vector& x);

struct MinDistance
{
  double value = 0.0;  // min_k phi(X_k)
  int k = 0;           // argmin, smallest index on ties
};

//! Exhaustive scan of the trajectory states. Throws std::domain_error if a
//! functional is not finite somewhere on the path, std::invalid_argument for
//! a nonpositive sphere radius or an empty trajectory.
MinDistance min_sq_distance(const Trajectory& traj, const Target& target);

}  // namespace icurve
