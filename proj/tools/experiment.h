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

// Experiment commands behind the ckss CLI.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ckss/engine.h"

namespace ckss::cli {

struct ExperimentSpec {
  std::string command;  // run | report | sweep | montecarlo | verify
  ProtocolKind kind = ProtocolKind::kCkSecureSum;
  std::size_t n = 4;
  std::size_t n_max = 4;  // sweep: inclusive upper end of the n range
  Residue modulus = kDefaultModulus;
  std::uint64_t seed = 0;
  std::size_t trials = 10000;
  std::size_t coalition_size = 2;
  std::string inputs = "random";  // "random" or comma-separated residues
  std::string coalition;          // comma-separated party ids (report)
  std::string out;                // empty: standard output
  std::size_t jobs = 1;
  bool initiator_mask = false;
};

/// "4..8" or "6". Throws ConfigError.
std::pair<std::size_t, std::size_t> parse_n_range(const std::string& text);

/// Comma-separated unsigned integers. Throws ConfigError.
std::vector<std::uint64_t> parse_list(const std::string& text);

/// Flat key=value lines; '#' starts a comment. Keys are returned as given.
/// Throws ParseError on a line without '='.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);

/// Writes via a temporary file and rename, so a failed command never leaves
/// a partial output behind.
void write_file_atomic(const std::string& path, const std::string& contents);

/// Runs spec.command. Results go to `out` (or spec.out), diagnostics to
/// `err`. Returns the process exit code; throws on invalid specs.
int execute(const ExperimentSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace ckss::cli
