// Copyright 2026 The nbspec Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace nbspec::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, CheckAllOnK4) {
  const Result r = invoke({"check", "all", "--graph", "C~"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"]);
  EXPECT_EQ(j["reports"][0]["checks"].size(), 8U);
}

TEST(Cli, CheckFailureIsReported) {
  // Gap check needs minimum degree 2; the path fails with a witness.
  const Result r = invoke({"check", "gap", "--graph", "Bg"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  const auto err = nlohmann::json::parse(r.err);
  EXPECT_EQ(err["status"], "check_failed");
  EXPECT_EQ(err["failures"][0]["check"], "gap");
}

TEST(Cli, SpectrumOfFourCycle) {
  const Result r = invoke({"spectrum", "--operator", "nbl", "--graph", "Cr", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "re,im\n0.000000,0.000000\n0.000000,0.000000\n1.000000,-1.000000\n"
            "1.000000,-1.000000\n1.000000,1.000000\n1.000000,1.000000\n"
            "2.000000,0.000000\n2.000000,0.000000\n");
}

TEST(Cli, CensusTable2Rows) {
  const Result r = invoke({"census", "--min-degree", "2", "--min-n", "4", "--max-n", "7",
                           "--merge-upto", "6", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("<=6,76,0,2,0,0\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("7,510,26,4,0,0\n"), std::string::npos) << r.out;
}

TEST(Cli, ReproducibleOutputs) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"walk", "-g", "C~", "-n", "4", "--samples", "2000", "--seed", "5"},
        std::vector<std::string>{"scatter", "--er-n", "30", "--alpha", "4", "--seed", "3"},
        std::vector<std::string>{"census", "--max-n", "5", "--workers", "3", "--format", "json"}}) {
    const Result a = invoke(args);
    const Result b = invoke(args);
    EXPECT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, WalkJsonFields) {
  const Result r = invoke({"walk", "-g", "Bw", "--source", "0", "--target", "2", "-n", "2",
                           "--samples", "1000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1U);
  for (const char* key :
       {"graph6", "source", "target", "n", "exact", "closed_form", "simulated", "stderr"}) {
    EXPECT_TRUE(j[0].contains(key)) << key;
  }
  EXPECT_EQ(j[0]["exact"], 0.5);
}

TEST(Cli, NbBuildAndMatrixExport) {
  const Result r = invoke({"nb", "build", "-g", "Bw"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["nodes"].size(), 6U);
  EXPECT_EQ(j[0]["arcs"].size(), 6U);
  const Result p = invoke({"nb", "build", "-g", "Bw", "--matrix", "p"});
  EXPECT_EQ(p.out.substr(0, 12), "0,0,0,1,0,0\n");
}

TEST(Cli, ScatterRadii) {
  const Result r = invoke({"scatter", "--er-n", "40", "--alpha", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j[0]["radius_nba"].get<double>(), 2.0);
  EXPECT_DOUBLE_EQ(j[0]["radius_nbl"].get<double>(), 0.5);
}

TEST(Cli, GenerateWritesGraph6) {
  const Result r = invoke({"generate", "-n", "4", "--min-degree", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST(Cli, Errors) {
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"spectrum", "--graph", "C~", "--unknown"}).code, kExitUsage);
  EXPECT_EQ(invoke({"spectrum", "--input", "/nonexistent/file.g6"}).code, kExitUsage);
  EXPECT_EQ(invoke({"spectrum", "--graph", "C~", "--precision", "0"}).code, kExitUsage);
  const Result bad = invoke({"spectrum", "--graph", "C}x"});
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_EQ(nlohmann::json::parse(bad.err)["kind"], "graph6");

  const auto path = std::filesystem::temp_directory_path() / "nbspec_cli_bad.g6";
  std::ofstream(path) << "C~\nBw\nC}x\n";
  const Result file = invoke({"census", "--input", path.string()});
  EXPECT_EQ(file.code, kExitError);
  EXPECT_EQ(nlohmann::json::parse(file.err)["line"], 3);
  std::filesystem::remove(path);
}

TEST(Cli, WorkersFromEnvironment) {
  ::setenv("NBSPEC_WORKERS", "2", 1);
  const Result a = invoke({"census", "--max-n", "5", "--format", "csv"});
  ::unsetenv("NBSPEC_WORKERS");
  const Result b = invoke({"census", "--max-n", "5", "--format", "csv"});
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace nbspec::cli
