#include "icurve/field/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace icurve {

double GaussianKernel::normalization(int dim)
{
  return std::pow(2.0 * std::numbers::pi, -0.5 * dim);
}

double GaussianKernel::value(const Vector& u)
{
  return normalization(static_cast<int>(u.size())) * std::exp(-0.5 * u.squaredNorm());
}

Vector GaussianKernel::gradient(const Vector& u)
{
  return -value(u) * u;
}

Matrix GaussianKernel::hessian(const Vector& u)
{
  const auto d = u.size();
  return value(u) * (u * u.transpose() - Matrix::Identity(d, d));
}

double GaussianKernel::self_convolution(const Vector& y)
{
  return square_integral(static_cast<int>(y.size())) * std::exp(-0.25 * y.squaredNorm());
}

double GaussianKernel::square_integral(int dim)
{
  return std::pow(4.0 * std::numbers::pi, -0.5 * dim);
}

double GaussianKernel::psi(const Vector& v)
{
  const double speed = v.norm();
  if (!(speed > 0.0))
    throw std::domain_error("psi_factor: undefined for a zero vector");
  // int exp(-tau^2 |v|^2 / 4) d tau = 2 sqrt(pi) / |v|
  return 2.0 * std::sqrt(std::numbers::pi) * square_integral(static_cast<int>(v.size())) / speed;
}

double kernel_eval(const Vector& u)
{
  return GaussianKernel::value(u);
}

Vector kernel_grad(const Vector& u)
{
  return GaussianKernel::gradient(u);
}

double psi_factor(const Vector& v)
{
  return GaussianKernel::psi(v);
}

}  // namespace icurve
