// Copyright 2026 The multiphoton Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli/app.hpp"
#include "cli/config.hpp"
#include "cli/registry.hpp"

namespace multiphoton::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "multiphoton");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("multiphoton_cli_" + std::string(::testing::UnitTest::GetInstance()
                                                  ->current_test_info()
                                                  ->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST(Config, ParsesKeysAndScanSection) {
  const RunConfig c = parse_config(
      "# comment\nexperiment = hom_dip\ntransmissivity = 0.4  # trailing\nseed = 9\n"
      "format = csv\n\n[scan]\nparam = delay\nstart = -2\nstop = 2\nsteps = 5\n");
  EXPECT_EQ(c.experiment, "hom_dip");
  EXPECT_EQ(c.parameters.at("transmissivity"), "0.4");
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(*c.formats, std::set<std::string>{"csv"});
  ASSERT_TRUE(c.scan.has_value());
  EXPECT_EQ(c.scan->parameter, "delay");
  EXPECT_EQ(c.scan->steps, 5);
}

TEST(Config, RejectsMalformedInput) {
  EXPECT_THROW(parse_config("no equals sign\n"), UsageError);
  EXPECT_THROW(parse_config("[other]\n"), UsageError);
  EXPECT_THROW(parse_config("[scan]\nparam = x\nstart = 0\n"), UsageError);
  EXPECT_THROW(parse_scan("delay:0:1"), UsageError);
  EXPECT_THROW(parse_scan("delay:0:1:1"), UsageError);
  EXPECT_THROW(parse_formats("csv,xml"), UsageError);
  EXPECT_THROW(parse_seed("-3"), UsageError);
}

TEST(Config, FlagsOverrideFile) {
  RunConfig file = parse_config("experiment = hom_dip\ntransmissivity = 0.4\nbandwidth = 2\n");
  RunConfig flags;
  flags.parameters["transmissivity"] = "0.3";
  flags.seed = 4;
  const RunConfig merged = merge(file, flags);
  EXPECT_EQ(merged.experiment, "hom_dip");
  EXPECT_EQ(merged.parameters.at("transmissivity"), "0.3");
  EXPECT_EQ(merged.parameters.at("bandwidth"), "2");
  EXPECT_EQ(merged.seed, 4u);
}

TEST(Registry, AlphabeticalWithAnchors) {
  const auto& entries = registry();
  ASSERT_FALSE(entries.empty());
  for (std::size_t i = 1; i < entries.size(); ++i) {
    EXPECT_LT(entries[i - 1].name, entries[i].name);
  }
  const std::string text = list_experiments();
  EXPECT_NE(text.find("hom_dip"), std::string::npos);
  EXPECT_NE(text.find("Eq. 11/12"), std::string::npos);
  EXPECT_NE(text.find("visibility_vs_distinguishability"), std::string::npos);
  EXPECT_NE(text.find("Eq. 53/54"), std::string::npos);
  EXPECT_EQ(invoke({"list"}).out, text);
}

TEST_F(CliTest, HomDipWritesCsvAndSummary) {
  const Outcome r = invoke({"run", "--experiment", "hom_dip", "--param", "transmissivity=0.5",
                            "--out", dir_.string()});
  EXPECT_EQ(r.status, 0) << r.err;
  const auto summary = nlohmann::json::parse(slurp(dir_ / "hom_dip.summary.json"));
  EXPECT_EQ(summary["experiment"], "hom_dip");
  EXPECT_TRUE(summary["pass"].get<bool>());
  bool found = false;
  for (const auto& c : summary["checks"]) {
    EXPECT_TRUE(c.contains("expected") && c.contains("actual") && c.contains("tolerance"));
    if (c["name"] == "dip_minimum") {
      found = true;
      EXPECT_EQ(c["expected"].get<double>(), 0.0);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(summary["parameters"]["transmissivity"].get<double>(), 0.5);

  const std::string csv = slurp(dir_ / "hom_dip.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "scaled_delay,coincidence,closed_form,classical");
  // The file reproduces the in-memory scan exactly.
  const ExperimentReport direct = experiments::run_hom_dip({});
  EXPECT_EQ(parse_csv(csv, "hom_dip"), direct.scan);
  for (const auto& entry : fs::directory_iterator(dir_)) {
    EXPECT_EQ(entry.path().string().find(".tmp"), std::string::npos);
  }
}

TEST_F(CliTest, BunchingRatioCheck) {
  const Outcome r = invoke({"run", "-e", "bunching", "--out", dir_.string(), "--format", "json"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_FALSE(fs::exists(dir_ / "bunching.csv"));
  const auto summary = nlohmann::json::parse(slurp(dir_ / "bunching.summary.json"));
  bool found = false;
  for (const auto& c : summary["checks"]) {
    if (c["name"] == "ratio") {
      found = true;
      EXPECT_EQ(c["expected"].get<double>(), 6.0);
    }
  }
  EXPECT_TRUE(found);
}

TEST_F(CliTest, RerunIsByteIdentical) {
  const std::vector<std::string> args{"run", "-e", "fringe_montecarlo", "--seed", "5",
                                      "-p", "samples=1000", "-p", "realizations=4",
                                      "--out", dir_.string()};
  ASSERT_EQ(invoke(args).status, 0);
  const std::string first = slurp(dir_ / "fringe_montecarlo.csv");
  ASSERT_EQ(invoke(args).status, 0);
  EXPECT_EQ(slurp(dir_ / "fringe_montecarlo.csv"), first);
}

TEST_F(CliTest, ScanFlagAndConfigFile) {
  fs::create_directories(dir_);
  {
    std::ofstream cfg(dir_ / "run.cfg");
    cfg << "experiment = noon_fringe\nphotons = 3\n[scan]\nparam = phase\nstart = 0\n"
           "stop = 6.283185307179586\nsteps = 61\n";
  }
  Outcome r = invoke({"run", "--config", (dir_ / "run.cfg").string(), "--out", dir_.string()});
  EXPECT_EQ(r.status, 0) << r.err;
  ScanResult scan = parse_csv(slurp(dir_ / "noon_fringe.csv"), "noon_fringe");
  EXPECT_EQ(scan.rows().size(), 61u);

  r = invoke({"run", "--config", (dir_ / "run.cfg").string(), "-p", "photons=2", "--scan",
              "phase:0:3.141592653589793:11", "--out", dir_.string()});
  EXPECT_EQ(r.status, 0) << r.err;
  scan = parse_csv(slurp(dir_ / "noon_fringe.csv"), "noon_fringe");
  EXPECT_EQ(scan.rows().size(), 11u);
  EXPECT_NEAR(scan.value(10, "probability"), 1.0, 1e-12);  // cos(2 pi) peak
}

TEST_F(CliTest, EnvironmentVariableSetsDefaultOutput) {
  ::setenv("MULTIPHOTON_OUT", dir_.string().c_str(), 1);
  const Outcome r = invoke({"run", "-e", "stimulated_emission"});
  ::unsetenv("MULTIPHOTON_OUT");
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "stimulated_emission.csv"));
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({"run", "--experiment", "foo", "--out", dir_.string()}).status, 2);
  EXPECT_EQ(invoke({"run", "-e", "hom_dip", "-p", "bogus=1", "--out", dir_.string()}).status, 2);
  EXPECT_EQ(invoke({"run", "-e", "hom_dip", "-p", "transmissivity=abc"}).status, 2);
  EXPECT_EQ(invoke({"run", "-e", "hom_dip", "-p", "transmissivity=1.5", "--out", dir_.string()}).status, 2);
  EXPECT_EQ(invoke({"run", "-e", "hom_dip", "--scan", "phase:0:1:3"}).status, 2);
  EXPECT_EQ(invoke({"run", "-e", "stimulated_emission", "--scan", "photons:1:2:2"}).status, 2);
  EXPECT_EQ(invoke({"run", "-e", "visibility_vs_distinguishability", "-p", "overlapping=3",
                    "--out", dir_.string()}).status, 2);
  EXPECT_EQ(invoke({"run"}).status, 2);
  EXPECT_EQ(invoke({"bogus"}).status, 2);
  EXPECT_EQ(invoke({}).status, 2);
  EXPECT_EQ(invoke({"--help"}).status, 0);
}

TEST_F(CliTest, UnwritableOutputExitsThree) {
  fs::create_directories(dir_);
  std::ofstream(dir_ / "file") << "x";
  EXPECT_EQ(invoke({"run", "-e", "hom_dip", "--out", (dir_ / "file" / "sub").string()}).status, 3);
}

TEST_F(CliTest, FailedChecksExitOne) {
  // Two realizations give a one-degree-of-freedom standard error; seed 2
  // lands outside three of them.
  const Outcome r = invoke({"run", "-e", "fringe_montecarlo", "-p", "samples=1000", "-p",
                            "realizations=2", "--seed", "2", "--out", dir_.string()});
  EXPECT_EQ(r.status, kExitChecksFailed) << r.err;
  const auto summary =
      nlohmann::json::parse(slurp(dir_ / "fringe_montecarlo.summary.json"));
  EXPECT_FALSE(summary["pass"].get<bool>());
  EXPECT_TRUE(fs::exists(dir_ / "fringe_montecarlo.csv"));
}

}  // namespace
}  // namespace multiphoton::cli
