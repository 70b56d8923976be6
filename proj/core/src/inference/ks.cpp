#include "icurve/inference/ks.hpp"

#include "icurve/inference/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace icurve {

double kolmogorov_q(double lambda)
{
  if (lambda <= 0.0)
    return 1.0;
  if (lambda < 1.0) {
    // Jacobi-transformed series, fast for small lambda.
    const double pi2 = std::numbers::pi * std::numbers::pi;
    double sum = 0.0;
    for (int j = 1; j <= 50; ++j) {
      const double odd = 2.0 * j - 1.0;
      const double term = std::exp(-odd * odd * pi2 / (8.0 * lambda * lambda));
      sum += term;
      if (term < 1e-18)
        break;
    }
    return std::clamp(1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * sum, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 == 1 ? term : -term);
    if (term < 1e-18)
      break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::span<const double> sorted, const std::function<double(double)>& cdf)
{
  const std::size_t n = sorted.size();
  if (n < 10)
    throw std::invalid_argument("ks_test: need at least 10 samples");
  if (!std::is_sorted(sorted.begin(), sorted.end()))
    throw std::invalid_argument("ks_test: samples must be sorted");
  const auto nd = static_cast<double>(n);
  double stat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(sorted[i]);
    stat = std::max({stat, (i + 1) / nd - f, f - i / nd});
  }
  stat = std::clamp(stat, 0.0, 1.0);
  return {stat, kolmogorov_q(std::sqrt(nd) * stat)};
}

KsResult ks_test_normal(std::span<const double> samples)
{
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  return ks_test(sorted, normal_cdf);
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b)
{
  if (a.empty() || b.empty())
    throw std::invalid_argument("ks_two_sample: both samples must be nonempty");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const auto n = static_cast<double>(x.size());
  const auto m = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double stat = 0.0;
  while (i < x.size() && j < y.size()) {
    const double t = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= t)
      ++i;
    while (j < y.size() && y[j] <= t)
      ++j;
    stat = std::max(stat, std::abs(i / n - j / m));
  }
  return {stat, kolmogorov_q(std::sqrt(n * m / (n + m)) * stat)};
}

}  // namespace icurve
