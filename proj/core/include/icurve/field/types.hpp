#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace icurve {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

//! Axis-aligned box in R^d, given by its lower and upper corners.
struct Box
{
  Vector lower;
  Vector upper;

  Box() = default;
  Box(Vector lo, Vector hi);

  //! Square box [-half_width, half_width]^d.
  static Box centered(int dim, double half_width);

  int dim() const { return static_cast<int>(lower.size()); }
  double volume() const;
  bool contains(const Vector& x) const;
  Box inflated(double margin) const;
};

//! Normalization used by every limit law: the deviation process is
//! sqrt(n h^(d-1)) (X_hat - x). `n` is the effective sample size, i.e. the
//! number of observations per unit volume of the domain.
struct AsymptoticScale
{
  double n = 0.0;
  double h = 0.0;
  int dim = 2;

  //! n h^(d-1)
  double rate() const;
  //! n h^(d+3), the bias calibration constant.
  double beta() const;
};

}  // namespace icurve
