#include "icurve/io/json.hpp"

#include "icurve/sim/fields.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace icurve::io {

using nlohmann::json;

namespace {

json to_json_vec(const Vector& v)
{
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    arr.push_back(v[i]);
  return arr;
}

json to_json_mat(const Matrix& m)
{
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Vector vec_from_json(const json& j, const char* what)
{
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(std::string(what) + ": expected a nonempty array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  return v;
}

Matrix mat_from_json(const json& j, const char* what)
{
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(std::string(what) + ": expected a nonempty matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw std::invalid_argument(std::string(what) + ": ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = row[static_cast<std::size_t>(c)].get<double>();
  }
  return m;
}

StopReason stop_reason_from(const std::string& s)
{
  if (s == "horizon")
    return StopReason::horizon;
  if (s == "low_speed")
    return StopReason::low_speed;
  if (s == "left_domain")
    return StopReason::left_domain;
  throw std::invalid_argument("unknown stop_reason '" + s + "'");
}

}  // namespace

std::string trajectory_to_json(const Trajectory& traj)
{
  const TrackConfig& cfg = traj.config;
  json meta = {
      {"delta", cfg.step},
      {"T", cfg.horizon},
      {"h", cfg.bandwidth.h},
      {"h_tilde", cfg.bandwidth.h_tilde},
      {"beta", cfg.bandwidth.beta},
      {"n", traj.sample_size},
      {"speed_floor", cfg.speed_floor},
      {"x0", to_json_vec(cfg.x0)},
      {"stopped_early", traj.stopped_early()},
      {"stop_reason", std::string(to_string(traj.stop_reason))},
      {"psd_warnings", traj.psd_warnings},
  };
  json states = json::array();
  for (const TrackState& s : traj.states) {
    states.push_back({{"k", s.k},
                      {"t", s.t},
                      {"x", to_json_vec(s.x)},
                      {"m", to_json_vec(s.m)},
                      {"c", to_json_mat(s.c)},
                      {"v", to_json_vec(s.v)}});
  }
  return json{{"metadata", std::move(meta)}, {"states", std::move(states)}}.dump(1);
}

Trajectory trajectory_from_json(const std::string& text)
{
  const json j = json::parse(text);
  const json& meta = j.at("metadata");
  Trajectory traj;
  traj.config.step = meta.at("delta").get<double>();
  traj.config.horizon = meta.at("T").get<double>();
  traj.config.bandwidth.h = meta.at("h").get<double>();
  traj.config.bandwidth.h_tilde = meta.value("h_tilde", traj.config.bandwidth.h);
  traj.config.bandwidth.beta = meta.value("beta", 0.0);
  traj.config.speed_floor = meta.value("speed_floor", 0.1);
  traj.sample_size = meta.at("n").get<double>();
  traj.stop_reason = stop_reason_from(meta.value("stop_reason", std::string("horizon")));
  traj.psd_warnings = meta.value("psd_warnings", 0);
  for (const json& s : j.at("states")) {
    TrackState st;
    st.k = s.at("k").get<int>();
    st.t = s.at("t").get<double>();
    st.x = vec_from_json(s.at("x"), "state.x");
    st.m = vec_from_json(s.at("m"), "state.m");
    st.c = mat_from_json(s.at("c"), "state.c");
    st.v = s.contains("v") ? vec_from_json(s.at("v"), "state.v") : Vector::Zero(st.x.size());
    traj.states.push_back(std::move(st));
  }
  if (traj.states.empty())
    throw std::invalid_argument("trajectory JSON has no states");
  traj.config.x0 = meta.contains("x0") ? vec_from_json(meta.at("x0"), "x0") : traj.states.front().x;
  return traj;
}

std::string test_report_to_json(const TestReport& r)
{
  json j = {
      {"statistic", r.statistic},
      {"critical_value", r.critical_value},
      {"p_value", r.p_value},
      {"reject", r.reject},
      {"tau_hat", r.tau_hat},
      {"k_hat", r.k_hat},
      {"d2_min", r.d2_min},
      {"law", std::string(to_string(r.law))},
      {"alpha", r.alpha},
      {"seed", r.seed},
      {"draws", r.draws},
  };
  if (r.regime_uncertain)
    j["regime_uncertain"] = true;
  return j.dump(2);
}

std::string study_to_json(const StudyResult& s)
{
  json j = {
      {"replications", s.replications},
      {"failures", s.failures},
      {"statistics", s.statistics},
      {"histogram",
       {{"lower", s.histogram.lower}, {"upper", s.histogram.upper}, {"counts", s.histogram.counts}}},
  };
  if (s.ks)
    j["ks"] = {{"stat", s.ks->statistic}, {"p", s.ks->p_value}};
  if (!s.targets.empty()) {
    json targets = json::array();
    for (std::size_t i = 0; i < s.targets.size(); ++i) {
      targets.push_back({{"point", to_json_vec(s.targets[i])},
                         {"distance", s.target_distance[i]},
                         {"empirical_power", s.empirical_power[i]},
                         {"theoretical_power", s.theoretical_power[i]}});
    }
    j["targets"] = std::move(targets);
  }
  return j.dump(2);
}

Target TargetSpec::to_target() const
{
  if (kind == Kind::sphere)
    return SphereTarget{center, radius};
  return PointTarget{center};
}

std::vector<Vector> GridSpec::points() const
{
  if (lower.size() != 2 || upper.size() != 2 || steps < 2)
    throw std::invalid_argument("grid: planar lower/upper corners and steps >= 2 required");
  std::vector<Vector> pts;
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      const double s = static_cast<double>(j) / (steps - 1);
      const double t = static_cast<double>(i) / (steps - 1);
      pts.push_back(Vector{{lower[0] + s * (upper[0] - lower[0]), lower[1] + t * (upper[1] - lower[1])}});
    }
  }
  return pts;
}

SyntheticScenario ScenarioFile::synthetic() const
{
  if (field != "circular")
    throw std::invalid_argument("scenario: unknown field '" + field + "'");
  SyntheticScenario sc;
  sc.field = make_circular_field(noise_scale);
  sc.domain = domain;
  sc.n = n;
  sc.noise_scale = noise_scale;
  sc.seed = seed;
  return sc;
}

LimitLawConfig ScenarioFile::law() const
{
  LimitLawConfig cfg;
  cfg.draws = draws;
  cfg.seed = seed;
  cfg.beta = track.bandwidth.beta;
  return cfg;
}

ScenarioFile parse_scenario(const std::string& text, const std::filesystem::path& base_dir)
{
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario: malformed JSON: ") + e.what());
  }
  try {
    ScenarioFile s;
    s.field = j.value("field", std::string("circular"));
    const json& dom = j.at("domain");
    s.domain = Box(vec_from_json(dom.at("lower"), "domain.lower"), vec_from_json(dom.at("upper"), "domain.upper"));
    s.n = j.value("n", Eigen::Index{0});
    s.noise_scale = j.value("noise_scale", 0.0);
    s.seed = j.value("seed", std::uint64_t{0});
    s.alpha = j.value("alpha", 0.05);
    s.replications = j.value("replications", std::size_t{200});
    s.draws = j.value("draws", std::size_t{200000});
    s.d2_true = j.value("d2_true", 0.0);
    s.standardize = j.value("standardize", true);
    if (j.contains("observations"))
      s.observations = base_dir / j.at("observations").get<std::string>();

    const json& tr = j.at("track");
    s.track.x0 = vec_from_json(tr.at("x0"), "track.x0");
    s.track.horizon = tr.at("T").get<double>();
    s.track.step = tr.at("delta").get<double>();
    s.track.speed_floor = tr.value("speed_floor", 0.1);
    s.track.bandwidth.h = tr.at("h").get<double>();
    s.track.bandwidth.h_tilde = tr.value("h_tilde", s.track.bandwidth.h);
    if (tr.contains("beta") && !tr.at("beta").is_null()) {
      s.track.bandwidth.beta = tr.at("beta").get<double>();
    } else {
      const int d = s.domain.dim();
      const double n_eff = static_cast<double>(s.n) / s.domain.volume();
      s.track.bandwidth.beta = n_eff * std::pow(s.track.bandwidth.h, d + 3);
    }

    if (j.contains("target")) {
      const json& t = j.at("target");
      TargetSpec spec;
      const std::string type = t.value("type", std::string("point"));
      if (type == "sphere")
        spec.kind = TargetSpec::Kind::sphere;
      else if (type != "point")
        throw std::invalid_argument("scenario: unknown target type '" + type + "'");
      spec.center = vec_from_json(t.at("center"), "target.center");
      spec.radius = t.value("radius", 0.0);
      s.target = spec;
    }
    if (j.contains("targets")) {
      for (const json& t : j.at("targets"))
        s.targets.push_back(vec_from_json(t, "targets[]"));
    }
    if (j.contains("grid")) {
      const json& g = j.at("grid");
      s.grid = GridSpec{vec_from_json(g.at("lower"), "grid.lower"), vec_from_json(g.at("upper"), "grid.upper"),
                        g.value("steps", 21)};
    }
    return s;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("scenario: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScenarioFile load_scenario(const std::filesystem::path& path)
{
  return parse_scenario(read_text_file(path), path.parent_path());
}

void write_text_file(const std::filesystem::path& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out)
    throw std::runtime_error("failed writing " + path.string());
}

}  // namespace icurve::io
