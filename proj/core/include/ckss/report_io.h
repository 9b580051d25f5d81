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

// Stable text outputs: JSON leakage reports, sweep CSV, Monte Carlo JSON.

#pragma once

#include <string>

#include "ckss/adversary.h"

namespace ckss {

/// {"protocol", "n", "modulus", "seed", "initiator_mask", "coalition",
///  "verdicts": [...], "aggregates": {...}}; keys in that order.
std::string report_to_json(const LeakageReport& report);

/// Header n,protocol,coalition,victim,leaked,segments_learned, one row per
/// (coalition, victim), then one summary row per victim class with
/// coalition "*", victim "class:<initiator|middle>", leaked = number of
/// leaking pairs and segments_learned = sum over the class.
std::string sweep_to_csv(const SweepResult& sweep, bool header = true);

std::string monte_carlo_to_json(const MonteCarloResult& result);

}  // namespace ckss
