#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "flagflux/cli.hpp"

namespace fs = std::filesystem;
using flagflux::Json;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = flagflux::cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("flagflux_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return path_ / name;
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

class EnvGuard {
 public:
  explicit EnvGuard(const char* value) { ::setenv("FLAGFLUX_RANK_BOUND", value, 1); }
  ~EnvGuard() { ::unsetenv("FLAGFLUX_RANK_BOUND"); }
};

}  // namespace

TEST(Cli, DualizeHeisenberg) {
  const auto o = invoke({"dualize", "--algebra", "(0,0,-e^{12})", "--ideal", "3"});
  ASSERT_EQ(o.code, 0) << o.out;
  const Json j = o.json();
  EXPECT_EQ(j["dual"]["algebra"], Json("(0,0,0)"));
  EXPECT_EQ(j["H_dual"], Json("-e^{123}"));
  EXPECT_EQ(j["certificate"], true);
}

TEST(Cli, DualizeFromAFlag) {
  const auto o = invoke({"dualize", "--rank", "2", "--ideal", "3", "--flux", "e^{123}"});
  ASSERT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(o.json()["dual"]["algebra"], Json("(0,0,e^{12})"));
}

TEST(Cli, DeclaredDimension) {
  const auto o = invoke({"dualize", "--algebra", "(-e^{12})", "--dim", "3", "--ideal", "3"});
  ASSERT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(o.json()["H_dual"], Json("-e^{123}"));
}

TEST(Cli, CorrespondEmptyTargetsCarryAReason) {
  const auto o = invoke({"correspond", "--rank", "3", "--ideal", "6", "--rank-bound", "7"});
  ASSERT_EQ(o.code, 0) << o.out;
  const Json j = o.json();
  EXPECT_TRUE(j["targets"].empty());
  EXPECT_NE(j["reason"].get<std::string>().find("no target up to rank 7"), std::string::npos);
  EXPECT_EQ(j["rank_bound_source"], Json("flag"));
}

TEST(Cli, CorrespondListsProjectiveSpace) {
  const auto o = invoke({"correspond", "--rank", "2", "--ideal", "3"});
  ASSERT_EQ(o.code, 0) << o.out;
  const Json j = o.json();
  ASSERT_EQ(j["targets"].size(), 1u);
  EXPECT_EQ(j["targets"][0]["name"], Json("SU(4)/S(U(3)×U(1)) ≅ CP^3"));
  EXPECT_EQ(j["rank_bound"], 13);
  EXPECT_EQ(j["rank_bound_source"], Json("default"));
}

TEST(Cli, RootSystemA1) {
  const auto o = invoke({"root-system", "--series", "A", "--rank", "1"});
  ASSERT_EQ(o.code, 0) << o.out;
  const Json j = o.json();
  EXPECT_EQ(j["flag_dim"], 1);
  EXPECT_EQ(j["summands"].size(), 1u);
}

TEST(Cli, NilradicalReportsJacobi) {
  const auto o = invoke({"nilradical", "--rank", "3"});
  ASSERT_EQ(o.code, 0) << o.out;
  const Json j = o.json();
  EXPECT_EQ(j["nilradical"]["presentation"], Json("(0,0,0,-e^{12},-e^{23},-e^{15}+e^{34})"));
  EXPECT_EQ(j["jacobi"]["passed"], true);
}

TEST(Cli, SelfDualA3IsNotACrash) {
  const auto o = invoke({"selfdual", "--rank", "3"});
  ASSERT_EQ(o.code, 0) << o.out;
  const Json j = o.json();
  EXPECT_TRUE(j["selfdual"].is_null());
  EXPECT_FALSE(j["note"].get<std::string>().empty());
}

TEST(Cli, ParseErrorExitsTwoWithPosition) {
  const auto o = invoke({"dualize", "--algebra", "(0,...,0)", "--ideal", "1"});
  EXPECT_EQ(o.code, 2);
  const Json j = o.json();
  EXPECT_EQ(j["error"]["kind"], Json("parse"));
  EXPECT_EQ(j["error"]["position"], 3);
}

TEST(Cli, UnknownOptionExitsTwo) {
  EXPECT_EQ(invoke({"dualize", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
}

TEST(Cli, DomainErrorExitsOneWithErrorObject) {
  const auto o = invoke({"dualize", "--algebra", "(0,0,-e^{12})", "--ideal", "1,2"});
  EXPECT_EQ(o.code, 1);
  const Json j = o.json();
  EXPECT_EQ(j["error"]["kind"], Json("domain"));
  EXPECT_NE(j["error"]["message"].get<std::string>().find("ideal"), std::string::npos);
  EXPECT_FALSE(j["error"].contains("position"));
}

TEST(Cli, NonIntegerRankBoundFromEnvironmentIsAParseError) {
  EnvGuard env("lots");
  EXPECT_EQ(invoke({"correspond", "--rank", "2", "--ideal", "3"}).code, 2);
}

TEST(Cli, RankBoundPrecedence) {
  EnvGuard env("2");
  const auto from_env = invoke({"correspond", "--rank", "2", "--ideal", "3"});
  ASSERT_EQ(from_env.code, 0);
  EXPECT_EQ(from_env.json()["rank_bound"], 2);
  EXPECT_EQ(from_env.json()["rank_bound_source"], Json("env"));
  EXPECT_TRUE(from_env.json()["targets"].empty());

  const auto from_flag =
      invoke({"correspond", "--rank", "2", "--ideal", "3", "--rank-bound", "4"});
  EXPECT_EQ(from_flag.json()["rank_bound"], 4);
  EXPECT_EQ(from_flag.json()["rank_bound_source"], Json("flag"));

  TempDir dir;
  const auto cfg = dir.write("job.json", R"j({"rank_bound": 5})j");
  const auto from_config = invoke({"correspond", "--rank", "2", "--ideal", "3",
                                   "--rank-bound", "4", "--config", cfg.string()});
  EXPECT_EQ(from_config.json()["rank_bound"], 5);
  EXPECT_EQ(from_config.json()["rank_bound_source"], Json("config"));
  EXPECT_NE(from_config.err.find("config file overrides --rank-bound"), std::string::npos);
}

TEST(Cli, ConfigFileSuppliesTheWholeJob) {
  TempDir dir;
  const auto cfg = dir.write(
      "job.json", R"j({"command": "dualize", "algebra": "(0,0,-e^{12})", "ideal": [3], "flux": "e^{123}"})j");
  const auto o = invoke({"dualize", "--ideal", "1", "--config", cfg.string()});
  ASSERT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(o.json()["H_dual"], Json("-e^{123}"));
  EXPECT_NE(o.err.find("config file overrides --ideal"), std::string::npos);
}

TEST(Cli, MalformedConfigIsAParseError) {
  TempDir dir;
  const auto cfg = dir.write("job.json", R"j({"ideal": [3,)j");
  const auto o = invoke({"dualize", "--config", cfg.string()});
  EXPECT_EQ(o.code, 2);
  EXPECT_EQ(o.json()["error"]["kind"], Json("parse"));
  EXPECT_EQ(invoke({"dualize", "--config", (dir.path() / "missing.json").string()}).code, 2);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> args{"correspond", "--rank", "3", "--ideal", "4,5,6",
                                      "--rank-bound", "7"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, TextFormat) {
  const auto o = invoke({"dualize", "--algebra", "(0,0,-e^{12})", "--ideal", "3",
                         "--format", "text"});
  ASSERT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("H_dual: -e^{123}\n"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("certificate: true\n"), std::string::npos);
  EXPECT_EQ(invoke({"dualize", "--format", "yaml"}).code, 2);
}

TEST(Cli, GcsTransportFromBlockFile) {
  TempDir dir;
  const auto blocks = dir.write("blocks.json", R"j({"blocks": [
      {"kind": "noncomplex", "a": 0, "x": -1, "y": -1},
      {"kind": "complex", "sign": 1},
      {"kind": "complex", "sign": 1}]})j");
  const auto cfg = dir.write("job.json", R"j({"target": {"series": "A", "rank": 3, "theta": [1, 2]}})j");
  const auto o = invoke({"gcs-transport", "--rank", "2", "--blocks", blocks.string(),
                         "--config", cfg.string()});
  ASSERT_EQ(o.code, 0) << o.out;
  const Json j = o.json();
  EXPECT_EQ(j["source_integrability"]["passed"], true);
  EXPECT_EQ(j["target_integrability"]["passed"], false);
  EXPECT_EQ(j["blocks"][0]["transported"]["type"], Json("complex"));
}

TEST(Golden, UpdateThenCompare) {
  TempDir dir;
  dir.write("a1.json", R"j({"command": "root-system", "rank": 1})j");
  dir.write("bad.json", R"j({"command": "dualize", "algebra": "(0,0,-e^{12})", "ideal": [1, 2]})j");
  const auto first = flagflux::cli::run_golden(dir.path(), false);
  ASSERT_EQ(first.size(), 2u);
  EXPECT_FALSE(first[0].matched);

  flagflux::cli::run_golden(dir.path(), true);
  for (const auto& o : flagflux::cli::run_golden(dir.path(), false)) {
    EXPECT_TRUE(o.matched) << o.job << " " << o.detail;
  }
  const Json bad = Json::parse(std::ifstream(dir.path() / "bad.expected.json"));
  EXPECT_EQ(bad["error"]["kind"], Json("domain"));

  dir.write("a1.expected.json", "{}\n");
  const auto after = flagflux::cli::run_golden(dir.path(), false);
  EXPECT_FALSE(after[0].matched);
  EXPECT_EQ(after[0].detail, "report differs");

  const auto o = invoke({"golden", "--dir", dir.path().string()});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("FAIL a1 (report differs)"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("1/2 golden reports match"), std::string::npos);
}

TEST(Golden, CheckedInJobsMatch) {
  for (const auto& o : flagflux::cli::run_golden(FLAGFLUX_JOBS_DIR, false)) {
    EXPECT_TRUE(o.matched) << o.job << " " << o.detail;
  }
}
