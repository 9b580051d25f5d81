// Copyright 2026 The ckss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ckss/errors.h"
#include "experiment.h"

namespace ckss::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = 0;
  std::string out;
};

// Runs the built CLI; stderr is folded into the captured output.
Outcome run_cli(const std::string& args) {
  const std::string cmd = std::string(CKSS_CLI_PATH) + " " + args + " 2>&1";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), got);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ckss_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, RunPrintsAnnouncedSum) {
  const Outcome o = run_cli("run --protocol ck --n 4 --inputs 1,2,3,4 --modulus 97 --seed 42 --out " +
                            path("t.txt"));
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "announced 10\n");
  EXPECT_EQ(slurp(path("t.txt")), slurp(CKSS_GOLDEN_DIR "/ck_n4_m97_seed42.txt"));
}

TEST_F(CliTest, RunCliftonZeros) {
  const Outcome o = run_cli("run --protocol clifton --n 4 --inputs 0,0,0,0");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "announced 0\n");
}

TEST_F(CliTest, TooFewPartiesFailsWithoutOutput) {
  const Outcome o = run_cli("run --protocol ck --n 3 --inputs 1,2,3 --out " + path("t.txt"));
  EXPECT_NE(o.code, 0);
  EXPECT_NE(o.out.find("too few parties"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("t.txt")));
  EXPECT_FALSE(fs::exists(path("t.txt.tmp")));
}

TEST_F(CliTest, ErrorPathsAreOneLineAndNonzero) {
  for (const std::string args : {"run --protocol ck --n 4 --inputs 1,2,3", "run --protocol ck --n 4 --inputs 1,2,x,4",
                                 "run --protocol ck --n 4 --modulus 1", "sweep --protocol ck --n 4..40",
                                 "montecarlo --protocol ck --n 5 --trials 0",
                                 "report --protocol ck --n 4 --coalition 1,2,3,4"}) {
    const Outcome o = run_cli(args);
    EXPECT_NE(o.code, 0) << args;
    EXPECT_EQ(std::count(o.out.begin(), o.out.end(), '\n'), 1) << args << ": " << o.out;
    EXPECT_EQ(o.out.rfind("error: ", 0), 0u) << args;
  }
  EXPECT_NE(run_cli("run --protocol yao").code, 0);
  EXPECT_NE(run_cli("").code, 0);
}

TEST_F(CliTest, ConfigFileWithFlagOverride) {
  {
    std::ofstream cfg(path("exp.cfg"));
    cfg << "# experiment\nprotocol = clifton\nn=4\ninputs=10,20,30,96\nmodulus=97\n";
  }
  Outcome o = run_cli("run --config " + path("exp.cfg"));
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(o.out, "announced 59\n");
  o = run_cli("run --config " + path("exp.cfg") + " --inputs 1,1,1,1");
  EXPECT_EQ(o.out, "announced 4\n");
  {
    std::ofstream cfg(path("cmd.cfg"));
    cfg << "command=run\nprotocol=ck\nn=5\ninputs=1,2,3,4,5\ninitiator_mask=true\n";
  }
  o = run_cli("--config " + path("cmd.cfg"));
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(o.out, "announced 15\n");
  o = run_cli("--config " + path("cmd.cfg") + " --inputs 0,0,0,0,1");
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(o.out, "announced 1\n");
}

TEST_F(CliTest, SweepCsvMiddleColumn) {
  const Outcome o = run_cli("sweep --protocol ksecure --n 4..6 --out " + path("s.csv"));
  ASSERT_EQ(o.code, 0) << o.out;
  std::istringstream in(slurp(path("s.csv")));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,protocol,coalition,victim,leaked,segments_learned");
  std::size_t summaries = 0;
  while (std::getline(in, line)) {
    if (line.find("class:middle") != std::string::npos) {
      ++summaries;
      // Fixed ring: P2..P_{n-1} leak only to their bracketing pair; P_n leaks
      // to every pair holding P_{n-1} (round totals follow from the sum).
      const std::size_t n = std::stoul(line.substr(0, line.find(',')));
      const auto fields_end = line.rfind(',');
      const auto leaked_start = line.rfind(',', fields_end - 1) + 1;
      EXPECT_EQ(std::stoul(line.substr(leaked_start, fields_end - leaked_start)), 2 * (n - 2)) << line;
    }
  }
  EXPECT_EQ(summaries, 3u);
}

TEST_F(CliTest, CkSweepInitiatorRowsShowExposure) {
  const Outcome o = run_cli("sweep --protocol ck --n 4..8");
  ASSERT_EQ(o.code, 0);
  std::istringstream in(o.out);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.find("class:initiator") == std::string::npos) continue;
    ++rows;
    const auto last = line.rfind(',');
    const auto prev = line.rfind(',', last - 1) + 1;
    EXPECT_GE(std::stoul(line.substr(prev, last - prev)), 1u) << line;
  }
  EXPECT_EQ(rows, 5u);
}

TEST_F(CliTest, ByteIdenticalOutputs) {
  for (const std::string args : {"run --protocol ck --n 6 --seed 9", "report --protocol ck --n 6 --coalition 2,5 --seed 3",
                                 "sweep --protocol ck --n 4..6 --seed 1",
                                 "montecarlo --protocol ksecure --n 5 --trials 200 --seed 8"}) {
    ASSERT_EQ(run_cli(args + " --jobs 1 --out " + path("a")).code, 0) << args;
    ASSERT_EQ(run_cli(args + " --jobs 4 --out " + path("b")).code, 0) << args;
    EXPECT_EQ(slurp(path("a")), slurp(path("b"))) << args;
    EXPECT_FALSE(slurp(path("a")).empty());
  }
}

TEST(ExperimentTest, ParseHelpers) {
  EXPECT_EQ(parse_n_range("4..8"), (std::pair<std::size_t, std::size_t>{4, 8}));
  EXPECT_EQ(parse_n_range("6"), (std::pair<std::size_t, std::size_t>{6, 6}));
  EXPECT_THROW(parse_n_range("4..x"), ConfigError);
  EXPECT_EQ(parse_list("1,2,3"), (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_THROW(parse_list("1,,3"), ConfigError);
  EXPECT_THROW(parse_list("-1"), ConfigError);
}

TEST(ExperimentTest, ExecuteInProcess) {
  ExperimentSpec spec;
  spec.command = "report";
  spec.n = 4;
  spec.modulus = 97;
  spec.coalition = "3,4";
  spec.seed = 42;
  std::ostringstream out, err;
  EXPECT_EQ(execute(spec, out, err), 0);
  EXPECT_NE(out.str().find("\"coalition\""), std::string::npos);

  spec.command = "dance";
  EXPECT_NE(execute(spec, out, err), 0);
  EXPECT_NE(err.str().find("unknown command"), std::string::npos);
}

}  // namespace
}  // namespace ckss::cli
