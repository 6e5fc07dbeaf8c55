#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / "superint_cli_test";
  fs::create_directories(d);
  return d;
}

int run(const std::string& args, const std::string& stdout_file = "") {
  std::string cmd = std::string(SUPERINT_CLI) + " " + args;
  cmd += stdout_file.empty() ? " > /dev/null 2>&1" : " > " + stdout_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json strip_timing(json j) {
  for (auto& s : j["suites"]) s.erase("timingMs");
  return j;
}

const std::string kFast = "--suites commutator,eigen,painleve,oscillator";

}  // namespace

TEST(Cli, FixedInstanceExitsZero) {
  const fs::path out = scratch_dir() / "fixed.json";
  EXPECT_EQ(run("--alpha 1 --beta 2 --omega 1 --suites all --out " + out.string()), 0);
  const json j = json::parse(slurp(out));
  EXPECT_EQ(j["overall"], "pass");
  EXPECT_EQ(j["schemaVersion"], 1);
  EXPECT_EQ(j["suites"].size(), 6u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("--alpha 1 --beta 1"), 2);
  EXPECT_EQ(run("--alpha 1/0"), 2);
  EXPECT_EQ(run("--suites nonsense"), 2);
  EXPECT_EQ(run("--alpha -3/4"), 2);
  EXPECT_EQ(run("--unknown-flag"), 2);
  EXPECT_EQ(run("--alpha 3/2 --beta 5/2 --suites eigen"), 0);
}

TEST(Cli, NumericSkippedBelowBoundaryExponent) {
  const fs::path out = scratch_dir() / "skip.json";
  EXPECT_EQ(run("--alpha 1/4 --beta 2 --suites numeric --out " + out.string()), 0);
  const json j = json::parse(slurp(out));
  EXPECT_EQ(j["suites"][0]["status"], "skipped");
}

TEST(Cli, InjectedFaultFails) {
  const fs::path out = scratch_dir() / "fault.json";
  EXPECT_EQ(run("--suites commutator --inject-c12-fault 1 --out " + out.string()), 1);
  const json j = json::parse(slurp(out));
  EXPECT_EQ(j["suites"][0]["status"], "fail");
  EXPECT_EQ(j["overall"], "fail");
}

TEST(Cli, ReproducibleReports) {
  const fs::path a = scratch_dir() / "a.json", b = scratch_dir() / "b.json";
  run(kFast + " --random 2 --seed 5 --out " + a.string());
  run(kFast + " --random 2 --seed 5 --out " + b.string());
  EXPECT_EQ(strip_timing(json::parse(slurp(a))), strip_timing(json::parse(slurp(b))));
  const fs::path c = scratch_dir() / "c.json";
  run(kFast + " --random 2 --seed 6 --out " + c.string());
  EXPECT_NE(strip_timing(json::parse(slurp(a))), strip_timing(json::parse(slurp(c))));
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const fs::path cfg = scratch_dir() / "run.cfg";
  std::ofstream(cfg) << "# test config\nalpha = 3/2\nbeta = 5/2\nsuites = eigen\n";
  const fs::path out = scratch_dir() / "cfg.json";
  EXPECT_EQ(run("--config " + cfg.string() + " --beta 3 --out " + out.string()), 0);
  const json j = json::parse(slurp(out));
  EXPECT_EQ(j["config"]["alpha"], "3/2");
  EXPECT_EQ(j["config"]["beta"], "3");
  EXPECT_EQ(j["config"]["suites"], json::array({"eigen"}));
  std::ofstream(cfg) << "colour = blue\n";
  EXPECT_EQ(run("--config " + cfg.string()), 2);
}

TEST(Cli, PainleveReport) {
  const fs::path out = scratch_dir() / "pvi.json";
  EXPECT_EQ(run("painleve report --out " + out.string()), 0);
  const json j = json::parse(slurp(out));
  EXPECT_EQ(j["q"]["q7"], "-5/4");
  EXPECT_EQ(j["gammaBranches"].size(), 2u);
  EXPECT_FALSE(j["residualZero"].get<bool>());
  EXPECT_TRUE(j["residualZeroDerived"].get<bool>());
}

TEST(Cli, OscillatorAndSpectrumOutputs) {
  const fs::path osc = scratch_dir() / "osc.json";
  EXPECT_EQ(run("oscillator spectrum --format json --max-p 2 --out " + osc.string()), 0);
  const json j = json::parse(slurp(osc));
  EXPECT_EQ(j.size(), 24u);
  const fs::path csv = scratch_dir() / "levels.csv";
  EXPECT_EQ(run("spectrum --numeric --out " + csv.string()), 0);
  EXPECT_EQ(slurp(csv).rfind("m,n,E_exact,E_numeric,rel_error,mesh_levels\n", 0), 0u);
  EXPECT_EQ(run("spectrum --numeric --alpha 1/4"), 2);
}
