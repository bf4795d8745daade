// Copyright 2026 The bboxer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bboxer_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result Run(const std::string& args) const {
    const std::string cmd =
        "cd '" + dir_.string() + "' && '" BBOXER_CLI "' " + args + " 2>&1";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string Slurp(const std::string& name) const {
    std::ifstream f(dir_ / name, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(Cli, OptimizeIsDeterministicAndReplays) {
  ASSERT_EQ(Run("optimize --algo de --dim 5 --budget 120 --seed 3 --out a").code, 0);
  ASSERT_EQ(Run("optimize --algo de --dim 5 --budget 120 --seed 3 --out b").code, 0);
  for (const char* ext : {".trace.json", ".csv", ".final.json"}) {
    EXPECT_EQ(Slurp(std::string("a") + ext), Slurp(std::string("b") + ext)) << ext;
  }
  const Result replay = Run("replay --trace a.trace.json");
  EXPECT_EQ(replay.code, 0) << replay.out;
  EXPECT_NE(replay.out.find("VERIFIED"), std::string::npos);
  // 120 steps plus the header.
  const std::string csv = Slurp("a.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 121);
}

TEST_F(Cli, SeedRangeWritesOneTracePerSeed) {
  const Result r = Run("optimize --algo onefifth --dim 3 --budget 30 --seeds 1..3 --out s");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(fs::exists(dir_ / "s-seed2.trace.json"));
  EXPECT_NE(r.out.find("median_final_value"), std::string::npos);
}

TEST_F(Cli, TamperedTraceFailsReplay) {
  ASSERT_EQ(Run("optimize --algo onefifth --dim 3 --budget 30 --out t").code, 0);
  auto doc = nlohmann::json::parse(Slurp("t.trace.json"));
  for (auto& rec : doc["records"]) rec["choice"] = 3 - rec["choice"].get<int>();
  std::ofstream(dir_ / "t.trace.json") << doc.dump();
  const Result r = Run("replay --trace t.trace.json");
  EXPECT_EQ(r.code, 1) << r.out;
  std::ofstream(dir_ / "t.trace.json") << "{\"records\": [";
  EXPECT_EQ(Run("replay --trace t.trace.json").code, 1);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  const Result unknown = Run("optimize --algo cmaes --dim 3");
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.out.find("onefifth"), std::string::npos);
  EXPECT_EQ(Run("optimize --algo de --budget 0").code, 2);
  EXPECT_EQ(Run("optimize --algo de --objective banana").code, 2);
  EXPECT_EQ(Run("optimize --algo de --config '{bad'").code, 2);
  EXPECT_EQ(Run("frobnicate").code, 2);
  EXPECT_EQ(Run("").code, 2);
  EXPECT_EQ(Run("bounds --format xml").code, 2);
  EXPECT_EQ(Run("--help").code, 0);
}

TEST_F(Cli, UnknownConfigKeyIsARuntimeFailure) {
  EXPECT_EQ(Run("optimize --algo de --budget 10 --config '{\"nope\": 1}'").code, 1);
}

TEST_F(Cli, BoundsPreset) {
  const Result r = Run("bounds --preset reference");
  ASSERT_EQ(r.code, 0);
  for (const char* v : {",91\n", ",34\n", ",88\n", ",189\n", ",482\n"}) {
    EXPECT_NE(r.out.find(v), std::string::npos) << v;
  }
  const Result grid = Run("bounds --s 1000,2000 --eps 0.05 --sigma 0.3 --format text");
  EXPECT_EQ(grid.code, 0);
  EXPECT_EQ(std::count(grid.out.begin(), grid.out.end(), '\n'), 3);
}

TEST_F(Cli, RetrofitWritesArtifacts) {
  const Result r = Run(
      "retrofit --model mlp2 --modifier broadcast --algo dcma --budget 150 --samples 400 --out m");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto summary = nlohmann::json::parse(Slurp("m.summary.json"));
  EXPECT_TRUE(summary["best_train_loss_non_increasing"].get<bool>());
  EXPECT_EQ(summary["dimension"], 8 + 3);
  EXPECT_TRUE(fs::exists(dir_ / "m.model.json"));
  EXPECT_EQ(Run("replay --trace m.trace.json").code, 0);
}

TEST_F(Cli, RetrofitBudgetFromBounds) {
  const Result r = Run("retrofit --budget-from-bounds --samples 2000 --eps 0.05 --delta 0.5 --out h");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(Slurp("h.summary.json"))["budget"], 12);
  EXPECT_EQ(Run("retrofit --budget-from-bounds --samples 20 --eps 0.01").code, 1);
}

TEST_F(Cli, Robustness) {
  const Result p = Run("robustness poison --n 1001 --k 1 --b 10 --trials 300");
  ASSERT_EQ(p.code, 0) << p.out;
  EXPECT_EQ(p.out.substr(0, 6), "n,k,b,");
  const Result e = Run("robustness extract --budget 4 --datasets 17");
  ASSERT_EQ(e.code, 0) << e.out;
  EXPECT_NE(e.out.find(",no,"), std::string::npos);  // not vulnerable
  const Result v = Run("robustness privacy --algos onefifth --pairs 3");
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_EQ(Run("robustness poison --adversary sneaky").code, 2);
  EXPECT_EQ(Run("robustness").code, 2);
}

}  // namespace
