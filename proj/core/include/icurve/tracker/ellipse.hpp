#pragma once

#include "icurve/tracker/trajectory.hpp"

#include <vector>

namespace icurve {

struct EllipseAxis
{
  Vector direction;  // unit vector
  double semi_length = 0.0;
};

struct Ellipsoid
{
  Vector center;
  std::vector<EllipseAxis> axes;

  //! Whether x lies in the closed region (degenerate axes count as zero width).
  bool contains(const Vector& x, double tol = 1e-12) const;
};

enum class BiasCorrection
{
  corrected,
  uncorrected,
};

//! (1 - alpha) confidence region of the curve point at a tracked state,
//! from the limit law N(sqrt(beta) M, C) of sqrt(n h^(d-1)) (X_hat - x).
//!
//! The center subtracts the bias sqrt(beta) M / sqrt(n h^(d-1)) unless
//! `mode` is uncorrected; semi-axes are sqrt(q lambda_i / (n h^(d-1))) along
//! the eigenvectors of C, with q the chi-square_d quantile at 1 - alpha.
Ellipsoid confidence_ellipse(const TrackState& state, double alpha, const AsymptoticScale& scale,
                             double beta, BiasCorrection mode = BiasCorrection::corrected);

}  // namespace icurve
