#pragma once

namespace icurve {

//! Standard normal distribution function.
double normal_cdf(double x);
//! Inverse of normal_cdf; p must lie in (0, 1).
double normal_quantile(double p);

//! Regularized lower incomplete gamma function P(a, x).
double regularized_gamma_p(double a, double x);

double chi2_cdf(double x, double dof);
//! Inverse of chi2_cdf; p must lie in [0, 1).
double chi2_quantile(double p, double dof);

}  // namespace icurve
