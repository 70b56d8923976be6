#pragma once

#include <functional>
#include <span>

namespace icurve {

struct KsResult
{
  double statistic = 0.0;
  double p_value = 1.0;
};

//! Kolmogorov survival function Q(lambda) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

//! One-sample Kolmogorov-Smirnov test of sorted samples against a continuous
//! CDF, with the asymptotic p-value Q(sqrt(n) D). Needs at least 10 samples.
KsResult ks_test(std::span<const double> sorted, const std::function<double(double)>& cdf);

//! Against the standard normal; the samples need not be sorted.
KsResult ks_test_normal(std::span<const double> samples);

//! Two-sample test, p-value Q(sqrt(nm/(n+m)) D).
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

}  // namespace icurve
