#include "icurve_cli/cli.hpp"

#include "icurve/io/csv.hpp"
#include "icurve/io/json.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

namespace fs = std::filesystem;
using icurve::cli::ExitCode;

namespace {

struct CliRun
{
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args)
{
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = icurve::cli::parse_and_dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string scenario(const std::string& name) { return (fs::path(ICURVE_SCENARIO_DIR) / name).string(); }

class CliFiles : public ::testing::Test
{
protected:
  void SetUp() override
  {
    dir_ = fs::temp_directory_path() /
           ("icurve_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST(Cli, TrackHappyPath)
{
  const CliRun r = run({"track", "--config", scenario("circle_n322.json")});
  ASSERT_EQ(r.code, ExitCode::ok) << r.err;
  const icurve::Trajectory traj = icurve::io::trajectory_from_json(r.out);
  EXPECT_EQ(traj.states.size(), 159u);
  EXPECT_FALSE(traj.stopped_early());
  EXPECT_NE(r.out.find("\"metadata\""), std::string::npos);

  const CliRun svg = run({"track", "--config", scenario("circle_n322.json"), "--format", "svg", "--ellipse-every", "20"});
  ASSERT_EQ(svg.code, ExitCode::ok) << svg.err;
  EXPECT_NE(svg.out.find("<ellipse"), std::string::npos);
}

TEST(Cli, SeedOverrideChangesTheData)
{
  const CliRun a = run({"gen-data", "--config", scenario("circle_n322.json")});
  const CliRun b = run({"gen-data", "--config", scenario("circle_n322.json"), "--seed", "99"});
  const CliRun c = run({"gen-data", "--config", scenario("circle_n322.json")});
  ASSERT_EQ(a.code, ExitCode::ok);
  EXPECT_EQ(a.out, c.out);
  EXPECT_NE(a.out, b.out);
  EXPECT_EQ(a.out.rfind("x1,x2,v1,v2\n", 0), 0u);
}

TEST(Cli, MissingConfigNamesThePath)
{
  const CliRun r = run({"track", "--config", "/nonexistent/none.json"});
  EXPECT_EQ(r.code, ExitCode::failure);
  EXPECT_NE(r.err.find("/nonexistent/none.json"), std::string::npos);
  EXPECT_NE(r.err.find("icurve: error:"), std::string::npos);
}

TEST(Cli, UsageErrors)
{
  EXPECT_EQ(run({"bogus-cmd"}).code, ExitCode::usage_error);
  EXPECT_EQ(run({}).code, ExitCode::usage_error);
  EXPECT_EQ(run({"track"}).code, ExitCode::usage_error);
  EXPECT_EQ(run({"track", "--config", scenario("circle_n322.json"), "--format", "png"}).code, ExitCode::usage_error);
  const CliRun wrong = run({"gen-data", "--config", scenario("circle_n322.json"), "--format", "svg"});
  EXPECT_EQ(wrong.code, ExitCode::usage_error);
  EXPECT_NE(wrong.err.find("svg"), std::string::npos);
  EXPECT_EQ(run({"gen-data", "--config", scenario("circle_n322.json"), "--data", "x.csv"}).code, ExitCode::usage_error);
  const CliRun help = run({"--help"});
  EXPECT_EQ(help.code, ExitCode::ok);
  EXPECT_NE(help.out.find("track"), std::string::npos);
}

TEST(Cli, MissingTargetIsAnError)
{
  const CliRun r = run({"test", "--config", scenario("pmap_n322.json")});
  EXPECT_EQ(r.code, ExitCode::failure);
  EXPECT_NE(r.err.find("target"), std::string::npos);
}

TEST_F(CliFiles, UnwritableOutput)
{
  const CliRun r = run({"track", "--config", scenario("circle_n322.json"), "--out", "/nonexistent/dir/t.json"});
  EXPECT_EQ(r.code, ExitCode::failure);
  EXPECT_NE(r.err.find("/nonexistent/dir/t.json"), std::string::npos);
}

TEST_F(CliFiles, RoundTripEveryShippedScenario)
{
  int count = 0;
  for (const auto& entry : fs::directory_iterator(ICURVE_SCENARIO_DIR)) {
    if (entry.path().extension() != ".json")
      continue;
    SCOPED_TRACE(entry.path().string());
    const std::string cfg = entry.path().string();
    const icurve::io::ScenarioFile sc = icurve::io::load_scenario(cfg);
    const std::string csv = file("obs.csv");
    const std::string traj = file("traj.json");

    ASSERT_EQ(run({"gen-data", "--config", cfg, "--out", csv}).code, ExitCode::ok);
    const icurve::ObservationSet obs = icurve::io::read_observations_csv(fs::path(csv), sc.domain);
    EXPECT_EQ(obs.size(), sc.n);

    const CliRun tracked = run({"track", "--config", cfg, "--data", csv, "--out", traj});
    ASSERT_EQ(tracked.code, ExitCode::ok) << tracked.err;
    // tracking the written data reproduces tracking the simulated data
    const CliRun direct = run({"track", "--config", cfg});
    EXPECT_EQ(icurve::io::read_text_file(traj), direct.out);

    if (sc.target) {
      const CliRun t = run({"test", "--config", cfg, "--trajectory", traj});
      ASSERT_EQ(t.code, ExitCode::ok) << t.err;
      const bool sphere = sc.target->kind == icurve::io::TargetSpec::Kind::sphere;
      EXPECT_NE(t.out.find(sphere ? "\"ci\"" : "\"p_value\""), std::string::npos) << t.out;
      const CliRun again = run({"test", "--config", cfg, "--data", csv});
      EXPECT_EQ(again.out, t.out);
    }
    if (sc.grid) {
      const CliRun m = run({"p-map", "--config", cfg, "--trajectory", traj});
      ASSERT_EQ(m.code, ExitCode::ok) << m.err;
      const auto rows = std::count(m.out.begin(), m.out.end(), '\n');
      EXPECT_EQ(rows, 1 + sc.grid->steps * sc.grid->steps);
      const CliRun svg = run({"p-map", "--config", cfg, "--trajectory", traj, "--format", "svg"});
      EXPECT_EQ(svg.code, ExitCode::ok) << svg.err;
    }
    ++count;
  }
  EXPECT_GE(count, 8);
}

TEST_F(CliFiles, StudiesWriteJson)
{
  // small copy of the power scenario so the test stays fast
  icurve::io::write_text_file(file("power.json"), R"({
    "domain": {"lower": [-2, -2], "upper": [2, 2]}, "n": 77, "noise_scale": 0.5, "seed": 6,
    "track": {"x0": [1, 0], "T": 3.14159, "delta": 0.05, "h": 0.4},
    "targets": [[0, 1.0], [0, 1.5]], "target": {"type": "point", "center": [0, 2]},
    "d2_true": 1.0, "replications": 100, "draws": 2000})");
  const CliRun p = run({"power-curve", "--config", file("power.json")});
  ASSERT_EQ(p.code, ExitCode::ok) << p.err;
  EXPECT_NE(p.out.find("\"empirical_power\""), std::string::npos);
  const CliRun m = run({"mc-study", "--config", file("power.json"), "--format", "svg"});
  ASSERT_EQ(m.code, ExitCode::ok) << m.err;
  EXPECT_NE(m.out.find("<svg"), std::string::npos);
}
