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

// Executable checks of the protocol claims, shared by the acceptance test
// binary and `ckss verify`.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ckss::verify {

struct ClaimResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ClaimOptions {
  std::size_t correctness_cases = 1000;
  bool initiator_mask = false;
};

ClaimResult check_correctness(const ClaimOptions& opt = {});
ClaimResult check_fig2_orders();
ClaimResult check_complexity_formulas();
ClaimResult check_zero_middle_leakage(const ClaimOptions& opt = {});
ClaimResult check_baseline_attacks();
ClaimResult check_oracle_equivalence();
ClaimResult check_neighbor_change();
ClaimResult check_determinism(const ClaimOptions& opt = {});
ClaimResult check_initiator_finding();

/// All nine claims in order.
std::vector<ClaimResult> run_all_claims(const ClaimOptions& opt = {});

/// "[PASS] 3 complexity formulas: ..." style line.
std::string format_claim(const ClaimResult& r);

}  // namespace ckss::verify
