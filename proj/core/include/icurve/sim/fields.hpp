#pragma once

#include "icurve/tracker/tracker.hpp"

namespace icurve {

//! v(x, y) = (-y, x) / sqrt(x^2 + y^2): unit speed, counterclockwise circles.
//! Throws std::domain_error at the origin.
Vector circular_field(const Vector& x);
Matrix circular_field_jacobian(const Vector& x);
std::vector<Matrix> circular_field_hessians(const Vector& x);

//! The circular field with isotropic noise covariance noise_scale^2 I.
AnalyticField make_circular_field(double noise_scale);
//! v(x) = value everywhere.
AnalyticField make_constant_field(const Vector& value, const Matrix& sigma);
//! v(x) = A x.
AnalyticField make_linear_field(const Matrix& a, const Matrix& sigma);
//! v(x) = (x_1^2, 0, ..., 0).
AnalyticField make_quadratic_field(int dim, const Matrix& sigma);

}  // namespace icurve
