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

#include "experiment.h"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ckss/adversary.h"
#include "ckss/errors.h"
#include "ckss/report_io.h"
#include "ckss/verify/claims.h"

namespace ckss::cli {

namespace {

constexpr std::size_t kMaxSweepParties = 16;

std::uint64_t parse_number(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("not an unsigned integer: '" + std::string(s) + "'");
  }
  return v;
}

Config base_config(const ExperimentSpec& spec, std::size_t n) {
  Config c;
  c.kind = spec.kind;
  c.n = n;
  c.modulus = Modulus(spec.modulus);
  c.master_seed = spec.seed;
  c.initiator_mask = spec.initiator_mask;
  c.validate();
  return c;
}

std::vector<SecretInput> resolve_inputs(const ExperimentSpec& spec, const Config& c) {
  if (spec.inputs == "random") return random_inputs(c.n, c.modulus, spec.seed);
  const auto values = parse_list(spec.inputs);
  if (values.size() != c.n) {
    throw ConfigError("--inputs has " + std::to_string(values.size()) + " values but --n is " +
                      std::to_string(c.n));
  }
  std::vector<SecretInput> inputs;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!c.modulus.contains(values[i])) {
      throw ConfigError("input " + std::to_string(values[i]) + " is not below the modulus");
    }
    inputs.push_back({PartyId{i + 1}, values[i]});
  }
  return inputs;
}

void emit(const ExperimentSpec& spec, const std::string& text, std::ostream& out) {
  if (spec.out.empty()) {
    out << text;
  } else {
    write_file_atomic(spec.out, text);
  }
}

int cmd_run(const ExperimentSpec& spec, std::ostream& out) {
  const Config c = base_config(spec, spec.n);
  const RunResult run = run_protocol(c, resolve_inputs(spec, c));
  if (!spec.out.empty()) write_file_atomic(spec.out, serialize_transcript(run.transcript));
  out << "announced " << run.announced << '\n';
  return 0;
}

int cmd_report(const ExperimentSpec& spec, std::ostream& out) {
  const Config c = base_config(spec, spec.n);
  if (spec.coalition.empty()) throw ConfigError("report needs --coalition");
  std::vector<PartyId> members;
  for (std::uint64_t id : parse_list(spec.coalition)) members.emplace_back(id);
  const Coalition coalition(std::move(members), c.n);
  emit(spec, report_to_json(leakage_report(c, resolve_inputs(spec, c), coalition)), out);
  return 0;
}

int cmd_sweep(const ExperimentSpec& spec, std::ostream& out) {
  if (spec.n_max > kMaxSweepParties) {
    throw ConfigError("sweep supports n <= " + std::to_string(kMaxSweepParties));
  }
  if (spec.n > spec.n_max) throw ConfigError("empty n range");
  std::string csv;
  for (std::size_t n = spec.n; n <= spec.n_max; ++n) {
    csv += sweep_to_csv(exhaustive_pair_sweep(base_config(spec, n), spec.jobs), n == spec.n);
  }
  emit(spec, csv, out);
  return 0;
}

int cmd_montecarlo(const ExperimentSpec& spec, std::ostream& out) {
  const Config c = base_config(spec, spec.n);
  emit(spec,
       monte_carlo_to_json(monte_carlo_leakage(c, spec.trials, spec.coalition_size, spec.seed, spec.jobs)),
       out);
  return 0;
}

int cmd_verify(const ExperimentSpec& spec, std::ostream& out) {
  verify::ClaimOptions opt;
  opt.initiator_mask = spec.initiator_mask;
  bool all = true;
  std::string table;
  for (const verify::ClaimResult& r : verify::run_all_claims(opt)) {
    table += verify::format_claim(r) + '\n';
    all = all && r.passed;
  }
  table += all ? "all claims PASS\n" : "some claims FAIL\n";
  out << table;
  if (!spec.out.empty()) write_file_atomic(spec.out, table);
  return all ? 0 : 1;
}

}  // namespace

std::pair<std::size_t, std::size_t> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t n = parse_number(text);
    return {n, n};
  }
  return {parse_number(std::string_view(text).substr(0, dots)),
          parse_number(std::string_view(text).substr(dots + 2))};
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    values.push_back(parse_number(std::string_view(text).substr(start, end - start)));
    start = end + 1;
  }
  return values;
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  std::size_t line_no = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return entries;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot write " + path);
    f << contents;
    f.close();
    if (!f) {
      std::filesystem::remove(tmp);
      throw ConfigError("failed writing " + path);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ConfigError("cannot move output into place at " + path + ": " + ec.message());
  }
}

int execute(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
  if (spec.command == "run") return cmd_run(spec, out);
  if (spec.command == "report") return cmd_report(spec, out);
  if (spec.command == "sweep") return cmd_sweep(spec, out);
  if (spec.command == "montecarlo") return cmd_montecarlo(spec, out);
  if (spec.command == "verify") return cmd_verify(spec, out);
  err << "error: unknown command '" << spec.command << "'\n";
  return 2;
}

}  // namespace ckss::cli
