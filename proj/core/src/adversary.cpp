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

#include "ckss/adversary.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "ckss/errors.h"

namespace ckss {

Coalition::Coalition(std::vector<PartyId> members, std::size_t n)
    : members_(std::move(members)), n_(n) {
  std::sort(members_.begin(), members_.end());
  if (members_.empty()) throw ConfigError("coalition must not be empty");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw ConfigError("coalition lists a party twice");
  }
  if (members_.front().index < 1 || members_.back().index > n) {
    throw ConfigError("coalition member outside P1..P" + std::to_string(n));
  }
  if (members_.size() >= n) throw ConfigError("coalition must be a proper subset of the parties");
}

bool Coalition::contains(PartyId p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

std::vector<PartyId> Coalition::outsiders() const {
  std::vector<PartyId> out;
  for (std::size_t i = 1; i <= n_; ++i) {
    if (!contains(PartyId{i})) out.emplace_back(i);
  }
  return out;
}

LinearForm input_form(const UnknownLayout& layout, PartyId p) {
  LinearForm f(layout.size(), 0);
  for (std::size_t j = 1; j <= layout.segments(); ++j) f[layout.segment(p, j)] = 1;
  return f;
}

LinearForm segment_form(const UnknownLayout& layout, PartyId p, std::size_t j) {
  LinearForm f(layout.size(), 0);
  f[layout.segment(p, j)] = 1;
  return f;
}

OwnKnowledge own_knowledge(const RunResult& run, const Coalition& c) {
  OwnKnowledge own;
  for (PartyId p : c.members()) {
    auto row = run.segments.row(p);
    own.segments.emplace(p, std::vector<Residue>(row.begin(), row.end()));
  }
  if (c.contains(kInitiator)) own.masks = run.masks;
  return own;
}

namespace {

void check_coalition(const Transcript& t, const Coalition& c) {
  if (c.parties() != t.config.n) {
    throw ConfigError("coalition is over " + std::to_string(c.parties()) +
                      " parties but the transcript has " + std::to_string(t.config.n));
  }
}

void add_own_equations(const UnknownLayout& layout, const Coalition& c, const OwnKnowledge& own,
                       std::vector<Equation>& eqs) {
  for (PartyId p : c.members()) {
    auto it = own.segments.find(p);
    if (it == own.segments.end() || it->second.size() != layout.segments()) {
      throw ConfigError("own knowledge is missing the segments of a member");
    }
    for (std::size_t j = 1; j <= layout.segments(); ++j) {
      Equation e{segment_form(layout, p, j), it->second[j - 1], Equation::Source::kOwnSegment, j, 0, p};
      eqs.push_back(std::move(e));
    }
  }
  if (c.contains(kInitiator) && layout.masks() > 0) {
    if (own.masks.size() != layout.masks()) throw ConfigError("own knowledge is missing masks");
    for (std::size_t r = 1; r <= layout.masks(); ++r) {
      LinearForm f(layout.size(), 0);
      f[layout.mask(r)] = 1;
      eqs.push_back({std::move(f), own.masks[r - 1], Equation::Source::kOwnMask, r, 0, {}});
    }
  }
}

Equation announced_equation(const UnknownLayout& layout, Residue announced) {
  LinearForm f(layout.size(), 0);
  for (std::size_t i = 0; i < layout.parties() * layout.segments(); ++i) f[i] = 1;
  return {std::move(f), announced, Equation::Source::kAnnouncedSum, 0, 0, {}};
}

}  // namespace

CoalitionView extract_view(const Transcript& t, const Coalition& c, const OwnKnowledge& own) {
  validate_transcript(t);
  check_coalition(t, c);
  CoalitionView view{c.members(), UnknownLayout::for_config(t.config), t.config.modulus, {}};
  const UnknownLayout& layout = view.layout;
  for (const Message& msg : t.messages) {
    if (!c.contains(msg.sender) && !c.contains(msg.receiver)) continue;
    const RingOrder& order = t.orders[msg.round - 1];
    LinearForm f(layout.size(), 0);
    for (std::size_t pos = 1; pos <= msg.hop; ++pos) f[layout.segment(order.at(pos), msg.round)] = 1;
    if (layout.masks() > 0) f[layout.mask(msg.round)] = 1;
    view.equations.push_back({std::move(f), msg.value, Equation::Source::kMessage, msg.round, msg.hop, {}});
  }
  add_own_equations(layout, c, own, view.equations);
  view.equations.push_back(announced_equation(layout, t.announced));
  return view;
}

CoalitionView ideal_view(const Transcript& t, const Coalition& c, const OwnKnowledge& own) {
  check_coalition(t, c);
  CoalitionView view{c.members(), UnknownLayout::for_config(t.config), t.config.modulus, {}};
  add_own_equations(view.layout, c, own, view.equations);
  view.equations.push_back(announced_equation(view.layout, t.announced));
  return view;
}

std::size_t RuleClosure::count_for(PartyId p) const {
  return static_cast<std::size_t>(std::count_if(
      segments.begin(), segments.end(), [p](const auto& kv) { return kv.first.first == p; }));
}

RuleClosure rule_closure(const CoalitionView& view, const Transcript& t) {
  const Config& c = t.config;
  const Modulus& m = c.modulus;
  const std::size_t n = c.n;
  const std::size_t rounds = c.rounds();

  // hop[r][h] is V_h of round r; hop[r][0] the round's starting offset.
  std::vector<std::vector<std::optional<Residue>>> hop(rounds + 1,
                                                       std::vector<std::optional<Residue>>(n + 1));
  std::vector<std::vector<std::optional<Residue>>> seg(n + 1,
                                                       std::vector<std::optional<Residue>>(rounds + 1));
  for (std::size_t r = 1; r <= rounds; ++r) {
    if (!c.masked()) hop[r][0] = 0;
  }
  for (const Equation& e : view.equations) {
    switch (e.source) {
      case Equation::Source::kMessage:
        hop[e.round][e.hop] = e.constant;
        break;
      case Equation::Source::kOwnSegment:
        seg[e.party.index][e.round] = e.constant;
        break;
      case Equation::Source::kOwnMask:
        hop[e.round][0] = e.constant;
        break;
      case Equation::Source::kAnnouncedSum:
        break;
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t r = 1; r <= rounds; ++r) {
      const RingOrder& order = t.orders[r - 1];
      for (std::size_t pos = 1; pos <= n; ++pos) {
        auto& before = hop[r][pos - 1];
        auto& after = hop[r][pos];
        auto& d = seg[order.at(pos).index][r];
        if (before && after && !d) {
          d = mod_sub(*after, *before, m);
          changed = true;
        } else if (before && d && !after) {
          after = mod_add(*before, *d, m);
          changed = true;
        } else if (after && d && !before) {
          before = mod_sub(*after, *d, m);
          changed = true;
        }
      }
    }
  }

  RuleClosure out;
  const std::vector<PartyId>& members = view.members;
  for (std::size_t i = 1; i <= n; ++i) {
    if (std::binary_search(members.begin(), members.end(), PartyId{i})) continue;
    for (std::size_t r = 1; r <= rounds; ++r) {
      if (seg[i][r]) out.segments.emplace(std::pair{PartyId{i}, r}, *seg[i][r]);
    }
  }
  return out;
}

LinearOracle::LinearOracle(std::span<const Equation> equations, std::size_t unknowns,
                           const Modulus& m)
    : unknowns_(unknowns), modulus_(m) {
  m.require_prime();
  for (const Equation& e : equations) {
    if (e.coefficients.size() != unknowns_) throw ConfigError("equation has the wrong width");
    Row row{e.coefficients, e.constant};
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Residue f = row.coefficients[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t col = 0; col < unknowns_; ++col) {
        const Residue rc = rows_[i].coefficients[col];
        if (rc != 0) row.coefficients[col] = mod_sub(row.coefficients[col], mod_mul(f, rc, m), m);
      }
      row.constant = mod_sub(row.constant, mod_mul(f, rows_[i].constant, m), m);
    }
    auto lead = std::find_if(row.coefficients.begin(), row.coefficients.end(),
                             [](Residue v) { return v != 0; });
    if (lead == row.coefficients.end()) {
      if (row.constant != 0) throw ProtocolError("coalition view is inconsistent");
      continue;
    }
    const std::size_t pivot = static_cast<std::size_t>(lead - row.coefficients.begin());
    const Residue inv = mod_inv(*lead, m);
    for (Residue& v : row.coefficients) v = mod_mul(v, inv, m);
    row.constant = mod_mul(row.constant, inv, m);
    // Keep the echelon form reduced: clear the new pivot from older rows.
    for (Row& other : rows_) {
      const Residue f = other.coefficients[pivot];
      if (f == 0) continue;
      for (std::size_t col = 0; col < unknowns_; ++col) {
        const Residue rc = row.coefficients[col];
        if (rc != 0) other.coefficients[col] = mod_sub(other.coefficients[col], mod_mul(f, rc, m), m);
      }
      other.constant = mod_sub(other.constant, mod_mul(f, row.constant, m), m);
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
  }
}

OracleAnswer LinearOracle::query(const LinearForm& target) const {
  if (target.size() != unknowns_) throw ConfigError("target has the wrong width");
  const Modulus& m = modulus_;
  LinearForm rest = target;
  Residue value = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Residue f = rest[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t col = 0; col < unknowns_; ++col) {
      const Residue rc = rows_[i].coefficients[col];
      if (rc != 0) rest[col] = mod_sub(rest[col], mod_mul(f, rc, m), m);
    }
    value = mod_add(value, mod_mul(f, rows_[i].constant, m), m);
  }
  const bool in_span = std::all_of(rest.begin(), rest.end(), [](Residue v) { return v == 0; });
  return in_span ? OracleAnswer{true, value} : OracleAnswer{false, 0};
}

OracleAnswer linear_oracle(const CoalitionView& view, const LinearForm& target) {
  return LinearOracle(view).query(target);
}

std::string_view to_string(VictimClass c) {
  return c == VictimClass::kInitiator ? "initiator" : "middle";
}

LeakageAggregates LeakageReport::aggregates() const {
  LeakageAggregates a;
  for (const LeakageVerdict& v : verdicts) {
    ++a.victims;
    if (v.real_determined) ++a.real_determined;
    if (!v.leaked) continue;
    ++a.leaked;
    if (v.victim_class == VictimClass::kInitiator) {
      ++a.leaked_initiator;
    } else {
      ++a.leaked_middle;
    }
  }
  return a;
}

LeakageReport analyze_run(const RunResult& run, const Coalition& c) {
  const Transcript& t = run.transcript;
  const Modulus& m = t.config.modulus;
  const OwnKnowledge own = own_knowledge(run, c);
  const CoalitionView real = extract_view(t, c, own);
  const LinearOracle real_oracle(real);
  const LinearOracle ideal_oracle(ideal_view(t, c, own));

  LeakageReport report{t.config, c, {}};
  for (PartyId v : c.outsiders()) {
    LeakageVerdict verdict;
    verdict.victim = v;
    verdict.victim_class = classify(v);
    const LinearForm target = input_form(real.layout, v);
    const OracleAnswer real_answer = real_oracle.query(target);
    verdict.real_determined = real_answer.determined;
    verdict.ideal_determined = ideal_oracle.query(target).determined;
    verdict.leaked = verdict.real_determined && !verdict.ideal_determined;
    if (real_answer.determined) {
      const Residue truth = mod_sum(run.segments.row(v), m);
      if (real_answer.value != truth) throw ProtocolError("oracle recovered a wrong input value");
      verdict.recovered_value = real_answer.value;
    }
    for (std::size_t j = 1; j <= real.layout.segments(); ++j) {
      const OracleAnswer a = real_oracle.query(segment_form(real.layout, v, j));
      if (!a.determined) continue;
      if (a.value != run.segments.at(v, j)) throw ProtocolError("oracle recovered a wrong segment");
      ++verdict.segments_learned;
    }
    report.verdicts.push_back(verdict);
  }
  return report;
}

LeakageReport leakage_report(const Config& config, std::span<const SecretInput> inputs,
                             const Coalition& c) {
  return analyze_run(run_protocol(config, inputs), c);
}

std::size_t SweepResult::leaked(VictimClass c) const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [c](const SweepEntry& e) {
    return e.verdict.victim_class == c && e.verdict.leaked;
  }));
}

std::size_t SweepResult::observations(VictimClass c) const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [c](const SweepEntry& e) {
    return e.verdict.victim_class == c;
  }));
}

namespace {

// Runs fn(i) for i in [0, count) on up to `jobs` threads; each index is
// handled by exactly one thread.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([w, jobs, count, &fn] {
      for (std::size_t i = w; i < count; i += jobs) fn(i);
    });
  }
}

}  // namespace

SweepResult exhaustive_pair_sweep(const Config& config, std::size_t jobs) {
  config.validate();
  const RunResult run =
      run_protocol(config, random_inputs(config.n, config.modulus, config.master_seed));
  std::vector<Coalition> pairs;
  for (std::size_t a = 1; a <= config.n; ++a) {
    for (std::size_t b = a + 1; b <= config.n; ++b) {
      pairs.emplace_back(std::vector<PartyId>{PartyId{a}, PartyId{b}}, config.n);
    }
  }
  std::vector<LeakageReport> reports(pairs.size(), LeakageReport{config, pairs.front(), {}});
  parallel_for(pairs.size(), jobs, [&](std::size_t i) { reports[i] = analyze_run(run, pairs[i]); });

  SweepResult sweep{config, {}};
  for (const LeakageReport& r : reports) {
    for (const LeakageVerdict& v : r.verdicts) sweep.entries.push_back({r.coalition, v});
  }
  return sweep;
}

MonteCarloResult monte_carlo_leakage(const Config& config, std::size_t trials,
                                     std::size_t coalition_size, std::uint64_t seed,
                                     std::size_t jobs) {
  config.validate();
  if (trials == 0) throw ConfigError("trials must be at least 1");
  if (coalition_size < 1 || coalition_size > config.n - 1) {
    throw ConfigError("coalition size must be in [1, " + std::to_string(config.n - 1) + "]");
  }
  struct Counts {
    std::size_t obs[2] = {0, 0};
    std::size_t leaks[2] = {0, 0};
  };
  std::vector<Counts> per_trial(trials);
  const std::uint64_t trial_root = derive_seed(seed, ~std::uint64_t{0});

  parallel_for(trials, jobs, [&](std::size_t t) {
    const std::uint64_t trial_seed = derive_seed(trial_root, t);
    RandomStream rng(trial_seed);
    std::vector<PartyId> pool;
    for (std::size_t i = 1; i <= config.n; ++i) pool.emplace_back(i);
    for (std::size_t i = 0; i < coalition_size; ++i) {
      const std::size_t pick = i + rng.uniform_below(pool.size() - i);
      std::swap(pool[i], pool[pick]);
    }
    const Coalition coalition(std::vector<PartyId>(pool.begin(), pool.begin() + coalition_size),
                              config.n);
    Config trial_config = config;
    trial_config.master_seed = derive_seed(trial_seed, 1);
    const auto inputs = random_inputs(config.n, config.modulus, derive_seed(trial_seed, 2));
    const LeakageReport report = leakage_report(trial_config, inputs, coalition);
    Counts& counts = per_trial[t];
    for (const LeakageVerdict& v : report.verdicts) {
      const int cls = v.victim_class == VictimClass::kInitiator ? 0 : 1;
      ++counts.obs[cls];
      if (v.leaked) ++counts.leaks[cls];
    }
  });

  Counts total;
  for (const Counts& c : per_trial) {
    for (int i = 0; i < 2; ++i) {
      total.obs[i] += c.obs[i];
      total.leaks[i] += c.leaks[i];
    }
  }
  auto estimate = [trials](std::size_t obs, std::size_t leaks) {
    ClassEstimate e{obs, leaks, 0.0, 0.0};
    if (obs > 0) {
      e.probability = static_cast<double>(leaks) / static_cast<double>(obs);
      e.standard_error =
          std::sqrt(e.probability * (1.0 - e.probability) / static_cast<double>(trials));
    }
    return e;
  };
  MonteCarloResult result;
  result.config = config;
  result.trials = trials;
  result.coalition_size = coalition_size;
  result.seed = seed;
  result.initiator = estimate(total.obs[0], total.leaks[0]);
  result.middle = estimate(total.obs[1], total.leaks[1]);
  result.overall = estimate(total.obs[0] + total.obs[1], total.leaks[0] + total.leaks[1]);
  return result;
}

}  // namespace ckss
