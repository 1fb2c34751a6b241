#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Invocation {
  int status = -1;
  std::string out;
};

Invocation run(const std::string& args) {
  const std::string cmd = std::string(NSCOMPAT_CLI) + " " + args + " 2>&1";
  Invocation r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) r.out += buf;
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::path(::testing::TempDir()) / ("nscompat_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

const char* kExample = R"({"params": {"alpha": 1, "beta": 1, "reynolds": 80},
  "harmonics": [{"j": 1, "u2": {"cos": [1, 0, -2, 0, 1]}, "u3": {"sin": [0, 4, 0, -4]}}]})";

TEST(Cli, ExampleWritesOracleReportAndSlices) {
  const fs::path d = fresh_dir("example");
  const Invocation r = run("example -o " + d.string());
  ASSERT_EQ(r.status, 0) << r.out;
  const auto cmp = nlohmann::json::parse(slurp(d / "oracle_comparison.json"));
  EXPECT_LT(cmp["max_relative"].get<double>(), 1e-8);
  for (const char* f : {"example_field.json", "report.json", "defect_xy.csv", "defect_profiles.csv", "u2_xy.csv", "u3_xy.csv"})
    EXPECT_TRUE(fs::exists(d / f)) << f;

  // u2 slice peaks at 1 at x = 0, y = 0 (y = 0 is not a uniform sample for 64 points; check the maximum)
  std::istringstream u2(slurp(d / "u2_xy.csv"));
  std::string line;
  std::getline(u2, line);
  double best = -1.0, bx = 0.0, by = 0.0;
  while (std::getline(u2, line)) {
    double x, y, v;
    char c1, c2;
    std::istringstream(line) >> x >> c1 >> y >> c2 >> v;
    if (v > best) best = v, bx = x, by = y;
  }
  EXPECT_NEAR(best, 1.0, 1e-3);
  EXPECT_EQ(bx, 0.0);
  EXPECT_LT(std::abs(by), 0.02);

  const auto rep = nlohmann::json::parse(slurp(d / "report.json"));
  EXPECT_EQ(rep["verdict"], "incompatible");
  EXPECT_GT(rep["divergence_defect"]["max_abs"].get<double>(), 1e-3);
}

TEST(Cli, CheckExampleIsIncompatible) {
  const fs::path d = fresh_dir("check_example");
  write(d / "field.json", kExample);
  const Invocation r = run("check " + (d / "field.json").string() + " -o " + (d / "out").string());
  EXPECT_EQ(r.status, 2) << r.out;
  EXPECT_NE(r.out.find("incompatible"), std::string::npos);
  EXPECT_TRUE(fs::exists(d / "out" / "defect_xy.csv"));
}

TEST(Cli, CheckIsDeterministic) {
  const fs::path d = fresh_dir("determinism");
  write(d / "field.json", kExample);
  run("check " + (d / "field.json").string() + " -o " + (d / "a").string());
  run("check " + (d / "field.json").string() + " -o " + (d / "b").string());
  for (const char* f : {"report.json", "defect_xy.csv", "defect_profiles.csv"})
    EXPECT_EQ(slurp(d / "a" / f), slurp(d / "b" / f)) << f;
}

TEST(Cli, CheckZeroFieldIsCompatible) {
  const fs::path d = fresh_dir("zero");
  write(d / "zero.json", R"({"params": {"alpha": 1, "beta": 1, "reynolds": 80}, "harmonics": []})");
  const Invocation r = run("check " + (d / "zero.json").string() + " -o " + d.string());
  EXPECT_EQ(r.status, 0) << r.out;
  const auto rep = nlohmann::json::parse(slurp(d / "report.json"));
  EXPECT_EQ(rep["divergence_defect"]["max_abs"].get<double>(), 0.0);
  EXPECT_EQ(rep["tangential_residual"]["max_abs"].get<double>(), 0.0);
}

TEST(Cli, MalformedInputIsAnError) {
  const fs::path d = fresh_dir("malformed");
  write(d / "bad.json", "{\"params\": {\"alpha\": 1,\n \"beta\": }");
  const Invocation r = run("check " + (d / "bad.json").string() + " -o " + d.string());
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;

  write(d / "typo.json", R"({"params": {"alpha": 1, "beta": 1, "reynolds": 80}, "harmonics": [{"j": 1, "u2": {"cosine": [1]}}]})");
  const Invocation t = run("validate " + (d / "typo.json").string() + " -o " + d.string());
  EXPECT_EQ(t.status, 1);
  EXPECT_NE(t.out.find("harmonics[0].u2.cosine"), std::string::npos) << t.out;
}

TEST(Cli, CheckRejectsInadmissibleField) {
  const fs::path d = fresh_dir("inadmissible");
  write(d / "f.json", R"({"params": {"alpha": 1, "beta": 1, "reynolds": 80}, "harmonics": [{"j": 1, "u1": {"cos": [1]}}]})");
  const Invocation r = run("check " + (d / "f.json").string() + " -o " + d.string());
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("no-slip"), std::string::npos) << r.out;
}

TEST(Cli, Validate) {
  const fs::path d = fresh_dir("validate");
  write(d / "example.json", kExample);
  EXPECT_EQ(run("validate " + (d / "example.json").string() + " -o " + d.string()).status, 0);

  write(d / "zero.json", R"({"params": {"alpha": 1, "beta": 1, "reynolds": 80}})");
  EXPECT_EQ(run("validate " + (d / "zero.json").string() + " -o " + d.string()).status, 0);

  write(d / "first_power.json", R"({"params": {"alpha": 1, "beta": 1, "reynolds": 80},
    "harmonics": [{"j": 1, "u2": {"cos": [-1, 0, 1]}, "u3": {"sin": [0, -2]}}]})");
  const Invocation r = run("validate " + (d / "first_power.json").string() + " -o " + d.string());
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("u3"), std::string::npos) << r.out;
  const auto v = nlohmann::json::parse(slurp(d / "validation.json"));
  EXPECT_FALSE(v["admissible"].get<bool>());
}

TEST(Cli, ParamOverrides) {
  const fs::path d = fresh_dir("override");
  write(d / "example.json", kExample);
  run("check " + (d / "example.json").string() + " --re 200 -n 48 --tol 1e-6 -o " + d.string());
  const auto rep = nlohmann::json::parse(slurp(d / "report.json"));
  EXPECT_EQ(rep["params"]["reynolds"].get<double>(), 200.0);
  EXPECT_EQ(rep["grid"]["n"].get<int>(), 48);
  EXPECT_EQ(rep["tolerance"].get<double>(), 1e-6);
  EXPECT_EQ(run("check " + (d / "example.json").string() + " --re -1 -o " + d.string()).status, 1);
}

TEST(Cli, FindProducesCompatibleField) {
  const fs::path d = fresh_dir("find");
  const Invocation r = run("find --seed 1 --restarts 3 -o " + d.string());
  ASSERT_EQ(r.status, 0) << r.out;
  const auto s = nlohmann::json::parse(slurp(d / "search_report.json"));
  EXPECT_TRUE(s["converged"].get<bool>());
  EXPECT_FALSE(s["trivial"].get<bool>());
  EXPECT_FALSE(s["trace"].empty());
  const Invocation c = run("check " + (d / "found_field.json").string() + " --tol 1e-8 -o " + (d / "check").string());
  EXPECT_EQ(c.status, 0) << c.out;
}

TEST(Cli, OssListsModesAndWritesField) {
  const fs::path d = fresh_dir("oss");
  const Invocation r = run("oss --mode 1 --amplitude 1e-9 --tol 1e-6 -o " + d.string());
  EXPECT_EQ(r.status, 0) << r.out;
  const auto m = nlohmann::json::parse(slurp(d / "modes.json"));
  ASSERT_GE(m["modes"].size(), 3u);
  EXPECT_LT(m["modes"][0]["growth_rate"].get<double>(), 0.0);
  EXPECT_TRUE(fs::exists(d / "mode_field.json"));
  EXPECT_EQ(run("oss --mode 999 -o " + d.string()).status, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("check").status, 1);
  EXPECT_EQ(run("--help").status, 0);
}

}  // namespace
