#pragma once

#include "icurve/inference/hypothesis.hpp"
#include "icurve/sim/studies.hpp"
#include "icurve/tracker/trajectory.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace icurve::io {

//! {"metadata": {delta, T, h, beta, n, stopped_early, stop_reason, ...},
//!  "states": [{k, t, x, m, c, v}, ...]}
std::string trajectory_to_json(const Trajectory& traj);
Trajectory trajectory_from_json(const std::string& text);

//! {statistic, critical_value, p_value, reject, tau_hat, k_hat, d2_min, law,
//!  alpha, seed, draws}
std::string test_report_to_json(const TestReport& report);

std::string study_to_json(const StudyResult& study);

struct TargetSpec
{
  enum class Kind
  {
    point,
    sphere,
  };
  Kind kind = Kind::point;
  Vector center;
  double radius = 0.0;

  Target to_target() const;
};

struct GridSpec
{
  Vector lower;
  Vector upper;
  int steps = 21;  // per axis

  std::vector<Vector> points() const;
};

//! Scenario file:
//! {field: "circular", domain: {lower, upper}, n, noise_scale, seed,
//!  track: {x0, T, delta, h, beta, h_tilde, speed_floor},
//!  target: {type: point|sphere, center, radius}, targets: [[..], ..],
//!  alpha, replications, draws, d2_true, standardize, observations, grid}
//! `observations` optionally names a CSV file (relative to the scenario
//! file) used instead of simulated data. A missing `beta` is derived from
//! the bandwidth as n_eff h^(d+3); a missing `h_tilde` defaults to h.
struct ScenarioFile
{
  std::string field = "circular";
  Box domain;
  Eigen::Index n = 0;
  double noise_scale = 0.0;
  std::uint64_t seed = 0;
  TrackConfig track;
  std::optional<TargetSpec> target;
  std::vector<Vector> targets;
  double alpha = 0.05;
  std::size_t replications = 200;
  std::size_t draws = 200000;
  double d2_true = 0.0;
  bool standardize = true;
  std::optional<std::filesystem::path> observations;
  std::optional<GridSpec> grid;

  SyntheticScenario synthetic() const;
  LimitLawConfig law() const;
};

ScenarioFile parse_scenario(const std::string& text,
                            const std::filesystem::path& base_dir = {});
ScenarioFile load_scenario(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
//! Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace icurve::io
