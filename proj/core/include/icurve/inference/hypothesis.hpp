#pragma once

#include "icurve/field/estimators.hpp"
#include "icurve/inference/limit_law.hpp"
#include "icurve/inference/target.hpp"
#include "icurve/tracker/trajectory.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace icurve {

enum class LawKind
{
  chi2type,
  normal,
};

std::string_view to_string(LawKind law);

struct TestReport
{
  double statistic = 0.0;
  double critical_value = 0.0;
  double p_value = 1.0;
  bool reject = false;
  double tau_hat = 0.0;
  int k_hat = 0;
  double d2_min = 0.0;
  LawKind law = LawKind::chi2type;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  std::size_t draws = 0;
  //! Set by test_functional_min when the gradient at the minimum falls in
  //! the band where neither limit regime is clearly indicated.
  bool regime_uncertain = false;
};

//! H0: the curve passes through `a`. Statistic n h^(d-1) min_k |X_k - a|^2,
//! critical value the Monte Carlo (1 - alpha) quantile of the chi-square-type
//! law at the argmin step; p-value the fraction of law samples >= statistic.
TestReport test_point_reach(const Trajectory& traj, const Vector& a, double alpha,
                            const AsymptoticScale& scale, const LimitLawConfig& cfg);
TestReport test_point_reach(const Trajectory& traj, const Vector& a, double alpha,
                            const LimitLawConfig& cfg);

struct NormalDistanceResult
{
  double d2_hat = 0.0;
  int k_hat = 0;
  double sigma_hat = 0.0;
  //! Bias of D_hat^2 in squared-distance units: 2 sqrt(beta) d M^T n / sqrt(n h^(d-1)).
  double bias = 0.0;
  bool degenerate = false;
  std::optional<double> z;
  std::pair<double, double> ci{0.0, 0.0};
};

//! Normal-regime inference on the squared distance to a point or sphere the
//! curve does not reach: standardized statistic against D2_null and a
//! (1 - alpha) interval for D^2. Throws std::invalid_argument for a
//! functional target.
NormalDistanceResult ci_distance_normal(const Trajectory& traj, const Target& target,
                                        double d2_null, double alpha, const AsymptoticScale& scale,
                                        double beta);

enum class Regime
{
  automatic,
  normal,
  chi2type,
};

struct FunctionalTestOptions
{
  Regime regime = Regime::automatic;
  //! Automatic switch: with s the null noise level of |phi'(X_k)|,
  //! sqrt(tr(H C H) / (n h^(d-1))), the chi-square-type law is used for
  //! |phi'| < switch_at * s and the normal law above; results with
  //! |phi'| / s inside [band_low, band_high] are flagged.
  double band_low = 2.0;
  double switch_at = 4.0;
  double band_high = 6.0;
};

//! H0: min_t phi(x(t)) = inf_null for a unique interior minimum. In the
//! normal regime the statistic is the z-score of sqrt(n h^(d-1)) (min phi -
//! inf_null) with mean sqrt(beta) M^T phi' and variance phi'^T C phi'; in the
//! chi-square-type regime it is n h^(d-1) (min phi - inf_null) against the
//! quadratic law of the Hessian.
TestReport test_functional_min(const Trajectory& traj, const FunctionalTarget& f, double inf_null,
                               double alpha, const AsymptoticScale& scale,
                               const LimitLawConfig& cfg, const FunctionalTestOptions& opts = {});

//! Asymptotic power of the point-reach test at true distance D > 0:
//! 1 - Phi(((n h^(d-1))^(-1/2) L - (n h^(d-1))^(1/2) D^2 - 2 sqrt(beta) D M^T n)
//!          / (2 D (n^T C n)^(1/2))).
double power_theoretical(double distance, double critical_value, const AsymptoticScale& scale,
                         double beta, const Vector& m_hat, const Matrix& c_hat,
                         const Vector& normal_hat);

struct PValuePoint
{
  Vector point;
  double p_value = 1.0;
};

//! p-value of the point-reach test at every grid point. Law samples are
//! shared between grid points with the same argmin step.
std::vector<PValuePoint> pvalue_map(const Trajectory& traj, const std::vector<Vector>& grid,
                                    double alpha, const AsymptoticScale& scale,
                                    const LimitLawConfig& cfg);

struct BranchingResult
{
  double nu = 0.0;
  double sigma2_hat = 0.0;
  double speed2 = 0.0;  // |V(x)|^2
  //! Observations with |V_i| = 1 exactly (rather than additive noise) make
  //! the null law of nu non-normal.
  bool unit_norm_caveat = false;
};

//! nu = sqrt(n h^d) (|V(x)|^2 - 1) / sigma_hat with
//! sigma_hat^2 = 4 int K^2 (1 + V^T Sigma_hat V). Strongly negative values
//! indicate a crossing. Sigma_hat is estimated from the data unless given.
BranchingResult branching_statistic(const ObservationSet& obs, const EstimatorConfig& cfg,
                                    const Vector& x,
                                    const std::optional<Matrix>& sigma_hat = std::nullopt);

//! sigma^2 = 4 int K^2 (1 + v^T Sigma v) for the Gaussian kernel.
double branching_variance(const Vector& v, const Matrix& sigma);

}  // namespace icurve
