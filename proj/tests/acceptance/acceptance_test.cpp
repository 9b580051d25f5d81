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

// Acceptance suite: one line per criterion, "[PASS]" or "[FAIL]".

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ckss/verify/claims.h"

namespace ckss::verify {
namespace {

namespace fs = std::filesystem;

void report(const ClaimResult& r) {
  std::cout << format_claim(r) << std::endl;
  EXPECT_TRUE(r.passed) << r.detail;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TEST(Acceptance, C1_Correctness) { report(check_correctness()); }
TEST(Acceptance, C2_FourPartyOrders) { report(check_fig2_orders()); }
TEST(Acceptance, C3_ComplexityFormulas) { report(check_complexity_formulas()); }
TEST(Acceptance, C4_ZeroMiddlePartyLeakage) { report(check_zero_middle_leakage()); }
TEST(Acceptance, C5_BaselineAttacks) { report(check_baseline_attacks()); }
TEST(Acceptance, C6_OracleEquivalence) { report(check_oracle_equivalence()); }
TEST(Acceptance, C7_NeighborChange) { report(check_neighbor_change()); }

// In-process byte identity plus two separate CLI executions per output kind.
TEST(Acceptance, C8_Determinism) {
  ClaimResult r = check_determinism();
  const fs::path dir = fs::temp_directory_path() / "ckss_acceptance_c8";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = CKSS_CLI_PATH;
  const char* commands[] = {
      "run --protocol ck --n 8 --seed 5",
      "report --protocol ck --n 8 --coalition 2,7 --seed 5",
      "sweep --protocol ck --n 4..7 --seed 5",
      "montecarlo --protocol ck --n 6 --trials 300 --seed 5",
  };
  for (const char* args : commands) {
    std::string files[2];
    for (int i = 0; i < 2; ++i) {
      const fs::path out = dir / ("out" + std::to_string(i));
      const std::string cmd = cli + " " + args + " --out " + out.string() + " > /dev/null";
      if (std::system(cmd.c_str()) != 0) {
        r.passed = false;
        r.detail = std::string("CLI failed: ") + args;
      }
      files[i] = slurp(out);
    }
    if (files[0] != files[1] || files[0].empty()) {
      r.passed = false;
      r.detail = std::string("CLI output differs: ") + args;
    }
  }
  fs::remove_all(dir);
  if (r.passed) r.detail += "; CLI files identical across executions";
  report(r);
}

TEST(Acceptance, C9_InitiatorFindingAndMask) { report(check_initiator_finding()); }

}  // namespace
}  // namespace ckss::verify
