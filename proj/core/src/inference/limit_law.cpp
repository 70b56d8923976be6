#include "icurve/inference/limit_law.hpp"

#include "icurve/sim/rng.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icurve {

namespace {

constexpr std::size_t kChunk = 4096;
constexpr std::uint32_t kLawPurpose = 0x4c;

}  // namespace

void LimitLawConfig::validate() const
{
  if (draws < 1000)
    throw std::invalid_argument("LimitLawConfig: need at least 1000 draws");
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("LimitLawConfig: beta must be nonnegative");
}

GaussianSampler::GaussianSampler(Vector mean, const Matrix& cov) : mean_(std::move(mean))
{
  const auto d = mean_.size();
  if (cov.rows() != d || cov.cols() != d)
    throw std::invalid_argument("GaussianSampler: covariance shape does not match the mean");
  if (!cov.allFinite())
    throw std::domain_error("GaussianSampler: covariance has non-finite entries");
  const Matrix sym = 0.5 * (cov + cov.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym);
  const double tol = 1e-10 * std::max(std::abs(sym.trace()), 1e-300);
  Vector lambda = eig.eigenvalues();
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < -tol)
      throw std::domain_error("GaussianSampler: covariance is not positive semidefinite");
    lambda[i] = std::sqrt(std::max(lambda[i], 0.0));
  }
  root_ = eig.eigenvectors() * lambda.asDiagonal() * eig.eigenvectors().transpose();
}

std::vector<double> sample_gaussian_functional(const Vector& m, const Matrix& c,
                                                const LimitLawConfig& cfg,
                                                const std::function<double(const Vector&)>& f)
{
  cfg.validate();
  const GaussianSampler sampler(std::sqrt(cfg.beta) * m, c);
  const Vector mean = std::sqrt(cfg.beta) * m;
  const Matrix& root = sampler.root();
  const auto d = m.size();

  std::vector<double> out(cfg.draws);
  const auto n_chunks = static_cast<long>((cfg.draws + kChunk - 1) / kChunk);
#pragma omp parallel for schedule(static)
  for (long chunk = 0; chunk < n_chunks; ++chunk) {
    CounterRng rng(cfg.seed, substream(static_cast<std::uint64_t>(chunk), kLawPurpose));
    Vector xi(d);
    Vector z(d);
    const std::size_t begin = static_cast<std::size_t>(chunk) * kChunk;
    const std::size_t end = std::min(begin + kChunk, cfg.draws);
    for (std::size_t i = begin; i < end; ++i) {
      for (Eigen::Index j = 0; j < d; ++j)
        xi[j] = rng.normal();
      z = mean;
      z.noalias() += root * xi;
      out[i] = f(z);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> sample_chi2type_law(const Vector& m, const Matrix& c, const Vector& v,
                                        const LimitLawConfig& cfg)
{
  // |Z|^2 - (v^T Z)^2 / |v|^2 is the quadratic law of phi(x) = |x - a|^2,
  // whose Hessian is 2 I.
  const auto d = m.size();
  return sample_quadratic_law(2.0 * Matrix::Identity(d, d), m, c, v, cfg);
}

std::vector<double> sample_quadratic_law(const Matrix& hessian, const Vector& m, const Matrix& c,
                                         const Vector& v, const LimitLawConfig& cfg)
{
  const auto d = m.size();
  if (hessian.rows() != d || hessian.cols() != d || v.size() != d)
    throw std::invalid_argument("sample_quadratic_law: dimension mismatch");
  if (!(v.norm() > 0.0))
    throw std::domain_error("sample_quadratic_law: flow direction must be nonzero");
  const Matrix h = 0.5 * (hessian + hessian.transpose());
  const Vector hv = h * v;
  const double vhv = v.dot(hv);
  const double h_norm = h.norm();
  const bool along_kernel = !(vhv > 0.05 * h_norm * v.squaredNorm());

  if (along_kernel) {
    return sample_gaussian_functional(m, c, cfg,
                                      [&](const Vector& z) { return 0.5 * z.dot(h * z); });
  }
  return sample_gaussian_functional(m, c, cfg, [&](const Vector& z) {
    const double zhz = z.dot(h * z);
    const double vhz = hv.dot(z);
    return 0.5 * (zhz - vhz * vhz / vhv);
  });
}

std::vector<double> sample_tangent_sphere_law(const Vector& m, const Matrix& c,
                                              const Vector& normal, const LimitLawConfig& cfg)
{
  const double len = normal.norm();
  if (!(len > 0.0))
    throw std::domain_error("sample_tangent_sphere_law: normal must be nonzero");
  const Vector n = normal / len;
  return sample_gaussian_functional(m, c, cfg, [&](const Vector& z) {
    const double g = n.dot(z);
    return g * g;
  });
}

double upper_quantile(std::span<const double> sorted, double alpha)
{
  if (sorted.empty())
    throw std::invalid_argument("upper_quantile: no samples");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("upper_quantile: alpha must lie in (0, 1)");
  const auto n = static_cast<double>(sorted.size());
  auto idx = static_cast<std::size_t>(std::ceil((1.0 - alpha) * n - 1e-9));
  idx = std::clamp<std::size_t>(idx, 1, sorted.size()) - 1;
  return sorted[idx];
}

double upper_tail_fraction(std::span<const double> sorted, double x)
{
  if (sorted.empty())
    throw std::invalid_argument("upper_tail_fraction: no samples");
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  return static_cast<double>(sorted.end() - it) / static_cast<double>(sorted.size());
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
  const auto block = philox4x32({static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                                 0x5eedu, 0u},
                                {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
  return (static_cast<std::uint64_t>(block[1]) << 32) | block[0];
}

}  // namespace icurve
