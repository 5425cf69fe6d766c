// Copyright 2026 The cvbroadcast Authors
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

// Drives the cvbcast binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CVBCAST_PATH
#error "CVBCAST_PATH must point at the cvbcast executable"
#endif

namespace {

namespace fs = std::filesystem;

struct Run {
  int exit_code;
  std::string out;
};

Run cvbcast(const std::string& args) {
  const std::string cmd = std::string(CVBCAST_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cvbcast_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST_F(Cli, CloneAtZeroSqueezing) {
  const auto run = cvbcast("clone --r 0");
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_NE(run.out.find("fidelity            pipeline=1 closed=1"), std::string::npos) << run.out;
}

TEST_F(Cli, CloneZeroPhase) {
  const auto run = cvbcast("clone --r 0.5 --phi 0");
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_NE(run.out.find("pipeline=0.661587544963"), std::string::npos) << run.out;
}

TEST_F(Cli, CloneRejectsNegativeSqueezing) { EXPECT_EQ(cvbcast("clone --r -1").exit_code, 2); }

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(cvbcast("").exit_code, 2);
  EXPECT_EQ(cvbcast("clone").exit_code, 2);
  EXPECT_EQ(cvbcast("clone --r 1 --phi 0 --phi-pi 0.25").exit_code, 2);
  EXPECT_EQ(cvbcast("broadcast --r 1 --variant nonsense").exit_code, 2);
  EXPECT_EQ(cvbcast("frobnicate").exit_code, 2);
  EXPECT_EQ(cvbcast("sweep --out - --quantity bogus").exit_code, 2);
  EXPECT_EQ(cvbcast("sweep --out - --r-min 2 --r-max 1").exit_code, 2);
}

TEST_F(Cli, BroadcastAtZeroSqueezing) {
  const auto run = cvbcast("broadcast --r 0");
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_NE(run.out.find("F_B pipeline          0.360750117041"), std::string::npos) << run.out;
  EXPECT_NE(run.out.find("success               false"), std::string::npos);
}

TEST_F(Cli, BroadcastQuarterPhaseReport) {
  const auto run = cvbcast("broadcast --r 1 --phi-pi 0.25");
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_NE(run.out.find("nonlocal pair (i,b')  separable"), std::string::npos) << run.out;
  EXPECT_NE(run.out.find("success               false"), std::string::npos);
}

TEST_F(Cli, BroadcastZeroPhaseReportsBothR) {
  const auto run = cvbcast("broadcast --r 1 --phi 0 --variant printed");
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_NE(run.out.find("R printed"), std::string::npos);
  EXPECT_NE(run.out.find("R reconciled"), std::string::npos);
  EXPECT_NE(run.out.find("local pair (i,b)      entangled"), std::string::npos) << run.out;
}

TEST_F(Cli, SweepWritesCsv) {
  const fs::path out = dir_ / "fb.csv";
  const auto run = cvbcast("sweep --r-min 0 --r-max 1 --r-steps 1 --phi-min 0 --phi-max-pi 0.25 --phi-steps 1 "
                           "--quantity FB_pipeline --out " + out.string());
  ASSERT_EQ(run.exit_code, 0);
  const std::string text = slurp(out);
  EXPECT_EQ(text.rfind("r,phi,value\n0,0,0.360750117041\n", 0), 0u) << text;
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}

TEST_F(Cli, SweepToStdout) {
  const auto run = cvbcast("sweep --r-min 0.5 --r-max 0.5 --phi-min 0 --phi-max 0 --quantity clone_F --out -");
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_EQ(run.out, "r,phi,value\n0.5,0,0.661587544963\n");
}

TEST_F(Cli, SweepIsByteIdentical) {
  const std::string args = "sweep --r-steps 20 --phi-steps 20 --quantity nu_local --out ";
  ASSERT_EQ(cvbcast(args + (dir_ / "a.csv").string()).exit_code, 0);
  ASSERT_EQ(cvbcast(args + (dir_ / "b.csv").string()).exit_code, 0);
  EXPECT_EQ(slurp(dir_ / "a.csv"), slurp(dir_ / "b.csv"));
}

TEST_F(Cli, SweepUnwritablePath) {
  EXPECT_EQ(cvbcast("sweep --out " + (dir_ / "missing" / "x.csv").string()).exit_code, 2);
}

TEST_F(Cli, VerifyAlwaysSucceeds) {
  const auto run = cvbcast("verify --r-steps 20 --phi-steps 10");
  EXPECT_EQ(run.exit_code, 0);
  EXPECT_NE(run.out.find("separability_R"), std::string::npos) << run.out;
}

}  // namespace
