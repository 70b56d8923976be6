#pragma once

#include "icurve/field/types.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace icurve {

struct LimitLawConfig
{
  std::size_t draws = 200000;
  std::uint64_t seed = 0;
  double beta = 0.0;

  void validate() const;
};

//! Draws from N(mean, cov) through the symmetric square root of cov.
//! Eigenvalues within -1e-10 tr(cov) of zero are clamped to zero; anything
//! more negative throws std::domain_error.
class GaussianSampler
{
public:
  GaussianSampler(Vector mean, const Matrix& cov);

  int dim() const { return static_cast<int>(mean_.size()); }
  const Matrix& root() const { return root_; }

  template <class Rng>
  Vector draw(Rng& rng) const
  {
    Vector xi(mean_.size());
    for (Eigen::Index i = 0; i < xi.size(); ++i)
      xi[i] = rng.normal();
    return mean_ + root_ * xi;
  }

private:
  Vector mean_;
  Matrix root_;
};

//! Sorted samples of f(Z), Z ~ N(sqrt(beta) m, c). Draws are split into
//! fixed-size chunks, each from its own (seed, chunk) substream, so the
//! result does not depend on how chunks are scheduled across threads.
std::vector<double> sample_gaussian_functional(const Vector& m, const Matrix& c,
                                                const LimitLawConfig& cfg,
                                                const std::function<double(const Vector&)>& f);

//! |Z|^2 - (v^T Z)^2 / |v|^2: the null law of n h^(d-1) min |X_k - a|^2 when
//! the curve passes through a.
std::vector<double> sample_chi2type_law(const Vector& m, const Matrix& c, const Vector& v,
                                        const LimitLawConfig& cfg);

//! (1/2) [H(Z, Z) - H(v, Z)^2 / H(v, v)] for a Hessian H of the functional at
//! the minimum. When H(v, v) <= 0.05 ||H|| |v|^2 the flow direction is
//! (numerically) in the kernel of H and the law (1/2) H(Z, Z) is used.
std::vector<double> sample_quadratic_law(const Matrix& hessian, const Vector& m, const Matrix& c,
                                         const Vector& v, const LimitLawConfig& cfg);

//! gamma^2 with gamma = n^T Z: the law for a curve tangent to a sphere
//! with unit normal n at the touching point.
std::vector<double> sample_tangent_sphere_law(const Vector& m, const Matrix& c,
                                              const Vector& normal, const LimitLawConfig& cfg);

//! Critical value L with roughly a fraction alpha of the samples >= L.
double upper_quantile(std::span<const double> sorted, double alpha);
//! Fraction of samples >= x.
double upper_tail_fraction(std::span<const double> sorted, double x);

//! Decorrelated 64-bit seed for a numbered sub-experiment.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace icurve
