#include "icurve_cli/cli.hpp"

#include "icurve/io/csv.hpp"
#include "icurve/io/json.hpp"
#include "icurve/io/svg.hpp"
#include "icurve/sim/studies.hpp"
#include "icurve/tracker/tracker.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

namespace icurve::cli {

namespace {

struct Options
{
  std::string config;
  std::string out;
  std::string format;
  std::optional<std::uint64_t> seed;
  std::string data;
  std::string trajectory;
  std::size_t ellipse_every = 10;
};

class Runner
{
public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out)
  {
    scenario_ = io::load_scenario(opt.config);
    if (opt.seed)
      scenario_.seed = *opt.seed;
  }

  void gen_data()
  {
    require_format({"csv"}, "csv");
    const ObservationSet obs = sample_observations(scenario_.synthetic());
    std::ostringstream ss;
    io::write_observations_csv(ss, obs);
    emit(ss.str());
  }

  void track()
  {
    const std::string fmt = require_format({"json", "svg"}, "json");
    const Trajectory traj = make_trajectory();
    if (fmt == "svg")
      emit(io::trajectory_svg(traj, scenario_.alpha, opt_.ellipse_every));
    else
      emit(io::trajectory_to_json(traj));
  }

  void test()
  {
    require_format({"json"}, "json");
    if (!scenario_.target)
      throw std::invalid_argument("scenario " + opt_.config + " has no target");
    const Trajectory traj = make_trajectory();
    const io::TargetSpec& spec = *scenario_.target;
    if (spec.kind == io::TargetSpec::Kind::point) {
      const TestReport rep = test_point_reach(traj, spec.center, scenario_.alpha, scenario_.law());
      emit(io::test_report_to_json(rep) + "\n");
      return;
    }
    const NormalDistanceResult res = ci_distance_normal(traj, spec.to_target(), scenario_.d2_true,
                                                        scenario_.alpha, traj.scale(),
                                                        traj.config.bandwidth.beta);
    nlohmann::json j = {{"d2_hat", res.d2_hat},   {"k_hat", res.k_hat},
                        {"sigma_hat", res.sigma_hat}, {"bias", res.bias},
                        {"degenerate", res.degenerate}, {"ci", {res.ci.first, res.ci.second}},
                        {"alpha", scenario_.alpha}};
    if (res.z)
      j["z"] = *res.z;
    emit(j.dump(2) + "\n");
  }

  void mc_study()
  {
    const std::string fmt = require_format({"json", "svg"}, "json");
    if (!scenario_.target)
      throw std::invalid_argument("scenario " + opt_.config + " has no target");
    const StudyResult res = mc_distance_study(scenario_.synthetic(), scenario_.track,
                                              scenario_.target->to_target(), scenario_.d2_true,
                                              scenario_.replications, scenario_.standardize);
    if (fmt == "svg")
      emit(io::histogram_svg(res.histogram, scenario_.standardize ? io::Overlay::normal : io::Overlay::chi2type,
                             scenario_.domain.dim() - 1));
    else
      emit(io::study_to_json(res) + "\n");
  }

  void power_curve()
  {
    const std::string fmt = require_format({"json", "svg"}, "json");
    if (scenario_.targets.empty())
      throw std::invalid_argument("scenario " + opt_.config + " has no targets");
    const StudyResult res = mc_power_study(scenario_.synthetic(), scenario_.track, scenario_.targets,
                                           scenario_.alpha, scenario_.replications, scenario_.law());
    if (fmt == "svg")
      emit(io::power_curve_svg(res, scenario_.alpha));
    else
      emit(io::study_to_json(res) + "\n");
  }

  void p_map()
  {
    const std::string fmt = require_format({"csv", "svg"}, "csv");
    if (!scenario_.grid)
      throw std::invalid_argument("scenario " + opt_.config + " has no grid");
    const Trajectory traj = make_trajectory();
    const std::vector<PValuePoint> map =
        pvalue_map(traj, scenario_.grid->points(), scenario_.alpha, traj.scale(), scenario_.law());
    if (fmt == "svg") {
      emit(io::pvalue_map_svg(map, scenario_.grid->steps, &traj));
    } else {
      std::ostringstream ss;
      io::write_pvalue_map_csv(ss, map);
      emit(ss.str());
    }
  }

private:
  std::string require_format(std::initializer_list<const char*> allowed, const char* fallback) const
  {
    if (opt_.format.empty())
      return fallback;
    for (const char* f : allowed)
      if (opt_.format == f)
        return opt_.format;
    throw CLI::ValidationError("--format", "format '" + opt_.format + "' is not supported by this command");
  }

  ObservationSet observations() const
  {
    if (!opt_.data.empty())
      return io::read_observations_csv(std::filesystem::path(opt_.data), scenario_.domain);
    if (scenario_.observations)
      return io::read_observations_csv(*scenario_.observations, scenario_.domain);
    return sample_observations(scenario_.synthetic());
  }

  Trajectory make_trajectory() const
  {
    if (!opt_.trajectory.empty())
      return io::trajectory_from_json(io::read_text_file(opt_.trajectory));
    return track_curve(observations(), scenario_.track);
  }

  void emit(const std::string& content) const
  {
    if (opt_.out.empty() || opt_.out == "-")
      out_ << content;
    else
      io::write_text_file(opt_.out, content);
  }

  const Options& opt_;
  std::ostream& out_;
  io::ScenarioFile scenario_;
};

}  // namespace

int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Integral curve tracking and inference for noisy vector fields", "icurve"};
  app.require_subcommand(1, 1);
  Options opt;

  struct Command
  {
    const char* name;
    const char* help;
    void (Runner::*run)();
    bool reads_trajectory;
  };
  const Command commands[] = {
      {"gen-data", "simulate observations from a scenario (csv)", &Runner::gen_data, false},
      {"track", "track the integral curve (json, svg)", &Runner::track, false},
      {"test", "test whether the curve reaches the scenario target (json)", &Runner::test, true},
      {"mc-study", "Monte Carlo law of the minimal distance (json, svg)", &Runner::mc_study, false},
      {"power-curve", "Monte Carlo power of the point-reach test (json, svg)", &Runner::power_curve, false},
      {"p-map", "p-value map over the scenario grid (csv, svg)", &Runner::p_map, true},
  };

  std::vector<CLI::App*> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", opt.config, "scenario JSON file")->required();
    sub->add_option("--out", opt.out, "output file (default: standard output)");
    sub->add_option("--seed", opt.seed, "override the scenario seed");
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv", "json", "svg"}));
    if (c.name != std::string("gen-data"))
      sub->add_option("--data", opt.data, "observations CSV instead of simulated data");
    if (c.reads_trajectory)
      sub->add_option("--trajectory", opt.trajectory, "previously tracked trajectory JSON");
    if (c.name == std::string("track"))
      sub->add_option("--ellipse-every", opt.ellipse_every, "draw an ellipse at every m-th state (svg)");
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "icurve: " << e.what() << "\n\n" << app.help();
    return ExitCode::usage_error;
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) {
        Runner runner(opt, out);
        (runner.*commands[i].run)();
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << "icurve: " << e.what() << '\n';
    return ExitCode::usage_error;
  } catch (const std::exception& e) {
    err << "icurve: error: " << e.what() << '\n';
    return ExitCode::failure;
  }
  return ExitCode::ok;
}

}  // namespace icurve::cli
