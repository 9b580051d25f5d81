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

// ckss: run segmented secure-sum protocols and analyze coalition leakage.
//
//   ckss run --protocol ck --n 4 --inputs 1,2,3,4 --modulus 97 --seed 42 --out t.txt
//   ckss report --protocol ck --n 4 --coalition 2,3 --out report.json
//   ckss sweep --protocol ck --n 4..8 --out sweep.csv
//   ckss montecarlo --protocol clifton --n 5 --trials 10000 --coalition-size 2
//   ckss verify
//
// Any subcommand accepts --config FILE with flat key=value lines using the
// flag names (e.g. "n=5", "initiator-mask=true"); flags on the command line
// override the file.

#include <algorithm>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ckss/errors.h"
#include "experiment.h"

namespace {

const std::set<std::string> kCommands = {"run", "report", "sweep", "montecarlo", "verify"};

// Splices config-file entries in as "--key=value" right after the
// subcommand name, so explicit flags (parsed later, last one wins) override.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (auto it = args.begin(); it != args.end();) {
    if (*it == "--config" && it + 1 != args.end()) {
      path = *(it + 1);
      it = args.erase(it, it + 2);
    } else if (it->rfind("--config=", 0) == 0) {
      path = it->substr(9);
      it = args.erase(it);
    } else {
      ++it;
    }
  }
  if (path.empty()) return args;

  std::vector<std::string> injected;
  std::string command;
  for (auto [key, value] : ckss::cli::read_config_file(path)) {
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "command") {
      command = value;
    } else {
      injected.push_back("--" + key + "=" + value);
    }
  }
  auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) { return kCommands.contains(a); });
  if (sub == args.end()) {
    if (command.empty()) throw ckss::ConfigError("no subcommand given on the command line or in the config");
    sub = args.insert(args.begin(), command);
  }
  args.insert(sub + 1, injected.begin(), injected.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segmented secure-sum protocol simulator and collusion analyzer", "ckss"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  ckss::cli::ExperimentSpec spec;
  std::string protocol = "ck";
  std::string n_text = "4";
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  spec.jobs = hw;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--protocol", protocol, "clifton | ksecure | ck")
        ->check(CLI::IsMember({"clifton", "ksecure", "ck"}));
    sub->add_option("--modulus", spec.modulus, "Ring size M (default 2^61-1)");
    sub->add_option("--seed", spec.seed, "Master seed");
    sub->add_flag("--initiator-mask", spec.initiator_mask, "Random per-round mask at the initiator");
    sub->add_option("--out", spec.out, "Output path (default: standard output)");
    sub->add_option("--jobs", spec.jobs, "Worker threads for sweeps and Monte Carlo")
        ->check(CLI::PositiveNumber);
  };

  auto* run = app.add_subcommand("run", "Execute one protocol run and write its transcript");
  common(run);
  run->add_option("--n", n_text, "Number of parties");
  run->add_option("--inputs", spec.inputs, "Comma-separated inputs or 'random'");

  auto* report = app.add_subcommand("report", "Leakage report for one coalition (JSON)");
  common(report);
  report->add_option("--n", n_text, "Number of parties");
  report->add_option("--inputs", spec.inputs, "Comma-separated inputs or 'random'");
  report->add_option("--coalition", spec.coalition, "Comma-separated colluding party ids")->required();

  auto* sweep = app.add_subcommand("sweep", "All 2-party coalitions over an n range (CSV)");
  common(sweep);
  sweep->add_option("--n", n_text, "Party count or range lo..hi");

  auto* mc = app.add_subcommand("montecarlo", "Monte Carlo leakage estimate over random coalitions");
  common(mc);
  mc->add_option("--n", n_text, "Number of parties");
  mc->add_option("--trials", spec.trials, "Number of trials");
  mc->add_option("--coalition-size", spec.coalition_size, "Colluding parties per trial");

  auto* verify = app.add_subcommand("verify", "Check every protocol claim and print PASS/FAIL");
  common(verify);

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    for (CLI::App* sub : app.get_subcommands()) spec.command = sub->get_name();
    spec.kind = ckss::parse_protocol_kind(protocol);
    if (spec.command == "sweep") {
      std::tie(spec.n, spec.n_max) = ckss::cli::parse_n_range(n_text);
    } else {
      spec.n = spec.n_max = ckss::cli::parse_n_range(n_text).first;
      if (n_text.find("..") != std::string::npos) throw ckss::ConfigError("--n range only valid for sweep");
    }
    return ckss::cli::execute(spec, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
