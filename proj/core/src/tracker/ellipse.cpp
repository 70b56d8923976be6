#include "icurve/tracker/ellipse.hpp"

#include "icurve/inference/distributions.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace icurve {

bool Ellipsoid::contains(const Vector& x, double tol) const
{
  const Vector diff = x - center;
  double q = 0.0;
  for (const EllipseAxis& axis : axes) {
    const double proj = axis.direction.dot(diff);
    if (axis.semi_length <= 0.0) {
      if (std::abs(proj) > tol)
        return false;
      continue;
    }
    q += (proj / axis.semi_length) * (proj / axis.semi_length);
  }
  return q <= 1.0 + tol;
}

Ellipsoid confidence_ellipse(const TrackState& state, double alpha, const AsymptoticScale& scale,
                             double beta, BiasCorrection mode)
{
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("confidence_ellipse: alpha must lie in (0, 1)");
  const double rate = scale.rate();
  if (!(rate > 0.0))
    throw std::invalid_argument("confidence_ellipse: n h^(d-1) must be positive");
  const int d = static_cast<int>(state.x.size());

  Ellipsoid out;
  out.center = state.x;
  if (mode == BiasCorrection::corrected && beta > 0.0)
    out.center -= std::sqrt(beta / rate) * state.m;

  const double q = chi2_quantile(1.0 - alpha, d);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (state.c + state.c.transpose()));
  for (int i = 0; i < d; ++i) {
    const double lambda = std::max(eig.eigenvalues()[i], 0.0);
    out.axes.push_back({eig.eigenvectors().col(i), std::sqrt(q * lambda / rate)});
  }
  return out;
}

}  // namespace icurve
