#include "icurve/sim/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace icurve {

namespace {

double checked_radius(const Vector& x)
{
  if (x.size() != 2)
    throw std::invalid_argument("circular_field: defined in the plane only");
  const double r = std::hypot(x[0], x[1]);
  if (!(r > 0.0))
    throw std::domain_error("circular_field: singular at the origin");
  return r;
}

}  // namespace

Vector circular_field(const Vector& x)
{
  const double r = checked_radius(x);
  return Vector{{-x[1] / r, x[0] / r}};
}

Matrix circular_field_jacobian(const Vector& x)
{
  const double r = checked_radius(x);
  const double r3 = r * r * r;
  const double a = x[0];
  const double b = x[1];
  Matrix j(2, 2);
  j << a * b / r3, -a * a / r3,
       b * b / r3, -a * b / r3;
  return j;
}

std::vector<Matrix> circular_field_hessians(const Vector& x)
{
  const double r = checked_radius(x);
  const double r3 = r * r * r;
  const double r5 = r3 * r * r;
  const double a = x[0];
  const double b = x[1];
  // v_1 = -b / r
  Matrix h1(2, 2);
  h1 << b / r3 - 3.0 * a * a * b / r5, a / r3 - 3.0 * a * b * b / r5,
        a / r3 - 3.0 * a * b * b / r5, 3.0 * a * a * b / r5;
  // v_2 = a / r
  Matrix h2(2, 2);
  h2 << -3.0 * a * b * b / r5, 2.0 * b / r3 - 3.0 * b * b * b / r5,
        2.0 * b / r3 - 3.0 * b * b * b / r5, -a / r3 + 3.0 * a * b * b / r5;
  return {h1, h2};
}

AnalyticField make_circular_field(double noise_scale)
{
  AnalyticField f;
  f.dim = 2;
  f.v = circular_field;
  f.v_prime = circular_field_jacobian;
  f.v_second = circular_field_hessians;
  f.sigma = noise_scale * noise_scale * Matrix::Identity(2, 2);
  return f;
}

AnalyticField make_constant_field(const Vector& value, const Matrix& sigma)
{
  const auto d = static_cast<int>(value.size());
  AnalyticField f;
  f.dim = d;
  f.v = [value](const Vector&) { return value; };
  f.v_prime = [d](const Vector&) { return Matrix::Zero(d, d).eval(); };
  f.v_second = [d](const Vector&) { return std::vector<Matrix>(d, Matrix::Zero(d, d)); };
  f.sigma = sigma;
  return f;
}

AnalyticField make_linear_field(const Matrix& a, const Matrix& sigma)
{
  const auto d = static_cast<int>(a.rows());
  AnalyticField f;
  f.dim = d;
  f.v = [a](const Vector& x) { return (a * x).eval(); };
  f.v_prime = [a](const Vector&) { return a; };
  f.v_second = [d](const Vector&) { return std::vector<Matrix>(d, Matrix::Zero(d, d)); };
  f.sigma = sigma;
  return f;
}

AnalyticField make_quadratic_field(int dim, const Matrix& sigma)
{
  AnalyticField f;
  f.dim = dim;
  f.v = [dim](const Vector& x) {
    Vector out = Vector::Zero(dim);
    out[0] = x[0] * x[0];
    return out;
  };
  f.v_prime = [dim](const Vector& x) {
    Matrix out = Matrix::Zero(dim, dim);
    out(0, 0) = 2.0 * x[0];
    return out;
  };
  f.v_second = [dim](const Vector&) {
    std::vector<Matrix> out(dim, Matrix::Zero(dim, dim));
    out[0](0, 0) = 2.0;
    return out;
  };
  f.sigma = sigma;
  return f;
}

}  // namespace icurve
