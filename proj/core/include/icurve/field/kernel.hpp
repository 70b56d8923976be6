#pragma once

#include "icurve/field/types.hpp"

namespace icurve {

//! Standard Gaussian kernel K(u) = (2 pi)^(-d/2) exp(-|u|^2 / 2) and the
//! closed forms derived from it.
struct GaussianKernel
{
  //! (2 pi)^(-d/2)
  static double normalization(int dim);

  static double value(const Vector& u);
  //! grad K(u) = -u K(u)
  static Vector gradient(const Vector& u);
  //! Hessian (u u^T - I) K(u)
  static Matrix hessian(const Vector& u);

  //! Self-convolution Psi(y) = int K(z) K(z + y) dz = (4 pi)^(-d/2) exp(-|y|^2/4).
  static double self_convolution(const Vector& y);
  //! int K(u)^2 du = (4 pi)^(-d/2)
  static double square_integral(int dim);

  //! psi(v) = int Psi(v tau) d tau = 2 sqrt(pi) (4 pi)^(-d/2) / |v|.
  //! Throws std::domain_error for v = 0.
  static double psi(const Vector& v);
};

double kernel_eval(const Vector& u);
Vector kernel_grad(const Vector& u);
double psi_factor(const Vector& v);

}  // namespace icurve
