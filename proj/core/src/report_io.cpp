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

#include "ckss/report_io.h"

#include "json.hpp"
#include <sstream>

namespace ckss {

namespace {

using json = nlohmann::ordered_json;

json coalition_json(const Coalition& c) {
  json a = json::array();
  for (PartyId p : c.members()) a.push_back(p.index);
  return a;
}

json config_json(const Config& c) {
  json j;
  j["protocol"] = std::string(to_string(c.kind));
  j["n"] = c.n;
  j["modulus"] = c.modulus.value();
  j["seed"] = c.master_seed;
  j["initiator_mask"] = c.initiator_mask;
  return j;
}

std::string coalition_label(const Coalition& c) {
  std::string label;
  for (PartyId p : c.members()) {
    if (!label.empty()) label += '+';
    label += 'P' + std::to_string(p.index);
  }
  return label;
}

json estimate_json(const ClassEstimate& e) {
  json j;
  j["observations"] = e.observations;
  j["leaks"] = e.leaks;
  j["probability"] = e.probability;
  j["standard_error"] = e.standard_error;
  return j;
}

}  // namespace

std::string report_to_json(const LeakageReport& report) {
  json j = config_json(report.config);
  j["coalition"] = coalition_json(report.coalition);
  json verdicts = json::array();
  for (const LeakageVerdict& v : report.verdicts) {
    json e;
    e["victim"] = v.victim.index;
    e["class"] = std::string(to_string(v.victim_class));
    e["real_determined"] = v.real_determined;
    e["ideal_determined"] = v.ideal_determined;
    e["leaked"] = v.leaked;
    e["segments_learned"] = v.segments_learned;
    e["recovered_value"] = v.recovered_value ? json(*v.recovered_value) : json(nullptr);
    verdicts.push_back(std::move(e));
  }
  j["verdicts"] = std::move(verdicts);
  const LeakageAggregates a = report.aggregates();
  json agg;
  agg["victims"] = a.victims;
  agg["real_determined"] = a.real_determined;
  agg["leaked"] = a.leaked;
  agg["leaked_initiator"] = a.leaked_initiator;
  agg["leaked_middle"] = a.leaked_middle;
  j["aggregates"] = std::move(agg);
  return j.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepResult& sweep, bool header) {
  std::ostringstream os;
  if (header) os << "n,protocol,coalition,victim,leaked,segments_learned\n";
  const std::string prefix =
      std::to_string(sweep.config.n) + ',' + std::string(to_string(sweep.config.kind)) + ',';
  std::size_t learned[2] = {0, 0};
  for (const SweepEntry& e : sweep.entries) {
    os << prefix << coalition_label(e.coalition) << ",P" << e.verdict.victim.index << ','
       << (e.verdict.leaked ? 1 : 0) << ',' << e.verdict.segments_learned << '\n';
    learned[e.verdict.victim_class == VictimClass::kInitiator ? 0 : 1] += e.verdict.segments_learned;
  }
  for (VictimClass c : {VictimClass::kInitiator, VictimClass::kMiddle}) {
    os << prefix << "*,class:" << to_string(c) << ',' << sweep.leaked(c) << ','
       << learned[c == VictimClass::kInitiator ? 0 : 1] << '\n';
  }
  return os.str();
}

std::string monte_carlo_to_json(const MonteCarloResult& result) {
  json j = config_json(result.config);
  j.erase("seed");
  j["seed"] = result.seed;
  j["trials"] = result.trials;
  j["coalition_size"] = result.coalition_size;
  j["initiator"] = estimate_json(result.initiator);
  j["middle"] = estimate_json(result.middle);
  j["overall"] = estimate_json(result.overall);
  return j.dump(2) + "\n";
}

}  // namespace ckss
