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

// What a semi-honest coalition can infer from a transcript.
//
// A coalition's knowledge is a system of linear equations over the
// unknowns of a run: every segment d_{i,j}, plus the initiator's masks when
// the run uses them. Each message the coalition sends or receives
// contributes V_t = mask_j + sum_{s<=t} d_{order_j[s],j}; members contribute
// their own segments (and masks, if P1 is a member); the announced result
// contributes sum_{i,j} d_{i,j} = S. A quantity is learned iff its linear
// form lies in the row span of that system over Z_M.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ckss/engine.h"
#include "ckss/modular.h"
#include "ckss/topology.h"

namespace ckss {

/// Sorted set of colluding parties; a non-empty proper subset of P1..Pn.
class Coalition {
 public:
  /// Throws ConfigError unless members form a proper, non-empty subset of
  /// P1..Pn with no duplicates.
  Coalition(std::vector<PartyId> members, std::size_t n);

  const std::vector<PartyId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  std::size_t parties() const { return n_; }
  bool contains(PartyId p) const;
  /// Parties not in the coalition, ascending.
  std::vector<PartyId> outsiders() const;

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  std::vector<PartyId> members_;
  std::size_t n_ = 0;
};

/// Index map from (party, segment) and mask rounds onto unknown slots.
class UnknownLayout {
 public:
  UnknownLayout() = default;
  UnknownLayout(std::size_t parties, std::size_t segments, std::size_t masks)
      : parties_(parties), segments_(segments), masks_(masks) {}

  static UnknownLayout for_config(const Config& c) {
    return {c.n, c.segments_per_party(), c.masked() ? c.rounds() : 0};
  }

  std::size_t parties() const { return parties_; }
  std::size_t segments() const { return segments_; }
  std::size_t masks() const { return masks_; }
  std::size_t size() const { return parties_ * segments_ + masks_; }

  std::size_t segment(PartyId p, std::size_t j) const {
    return (p.index - 1) * segments_ + (j - 1);
  }
  std::size_t mask(std::size_t round) const { return parties_ * segments_ + (round - 1); }
  bool is_mask(std::size_t slot) const { return slot >= parties_ * segments_; }

  friend bool operator==(const UnknownLayout&, const UnknownLayout&) = default;

 private:
  std::size_t parties_ = 0;
  std::size_t segments_ = 0;
  std::size_t masks_ = 0;
};

/// Dense coefficient vector over an UnknownLayout.
using LinearForm = std::vector<Residue>;

LinearForm input_form(const UnknownLayout& layout, PartyId p);
LinearForm segment_form(const UnknownLayout& layout, PartyId p, std::size_t j);

struct Equation {
  enum class Source { kMessage, kOwnSegment, kOwnMask, kAnnouncedSum };

  LinearForm coefficients;
  Residue constant = 0;
  Source source = Source::kMessage;
  std::size_t round = 0;  // message round, own segment index, or mask round
  std::size_t hop = 0;    // kMessage
  PartyId party;          // kOwnSegment
};

/// What a coalition privately holds before looking at any messages.
struct OwnKnowledge {
  std::map<PartyId, std::vector<Residue>> segments;
  std::vector<Residue> masks;  // only when the initiator is a member
};

/// Restricts a run's ground truth to what the coalition's members own.
OwnKnowledge own_knowledge(const RunResult& run, const Coalition& c);

struct CoalitionView {
  std::vector<PartyId> members;
  UnknownLayout layout;
  Modulus modulus;
  std::vector<Equation> equations;
};

/// Equations from every message with a member as sender or receiver, each
/// member's own segments (and masks), and the announced sum.
CoalitionView extract_view(const Transcript& t, const Coalition& c, const OwnKnowledge& own);

/// Own knowledge plus the announced sum only: what the coalition would
/// learn from a trusted third party.
CoalitionView ideal_view(const Transcript& t, const Coalition& c, const OwnKnowledge& own);

/// Segments fixed by the bracketing rule: d_{p,j} = V_t - V_{t-1} when
/// both hop values around p in round j are known, with values propagated
/// through segments already known, to a fixpoint. Sound but incomplete.
struct RuleClosure {
  std::map<std::pair<PartyId, std::size_t>, Residue> segments;

  bool contains(PartyId p, std::size_t j) const { return segments.contains({p, j}); }
  std::size_t count_for(PartyId p) const;
};

RuleClosure rule_closure(const CoalitionView& view, const Transcript& t);

struct OracleAnswer {
  bool determined = false;
  Residue value = 0;  // meaningful only when determined
};

/// Reduced row echelon form of a view over the field Z_M, answering span
/// membership queries. Throws ConfigError for a non-prime modulus and
/// ProtocolError if the equations are inconsistent.
class LinearOracle {
 public:
  LinearOracle(std::span<const Equation> equations, std::size_t unknowns, const Modulus& m);
  explicit LinearOracle(const CoalitionView& view)
      : LinearOracle(view.equations, view.layout.size(), view.modulus) {}

  std::size_t rank() const { return pivots_.size(); }

  /// Whether target is a combination of the equations, and its forced value.
  OracleAnswer query(const LinearForm& target) const;

 private:
  struct Row {
    LinearForm coefficients;
    Residue constant = 0;
  };

  std::size_t unknowns_;
  Modulus modulus_;
  std::vector<Row> rows_;             // pivot coefficient normalized to 1
  std::vector<std::size_t> pivots_;   // pivot column of rows_[i]
};

OracleAnswer linear_oracle(const CoalitionView& view, const LinearForm& target);

enum class VictimClass { kInitiator, kMiddle };
std::string_view to_string(VictimClass c);

inline VictimClass classify(PartyId p) {
  return p.is_initiator() ? VictimClass::kInitiator : VictimClass::kMiddle;
}

struct LeakageVerdict {
  PartyId victim;
  VictimClass victim_class = VictimClass::kMiddle;
  bool real_determined = false;
  bool ideal_determined = false;
  bool leaked = false;
  std::size_t segments_learned = 0;
  std::optional<Residue> recovered_value;  // set when real_determined
};

struct LeakageAggregates {
  std::size_t victims = 0;
  std::size_t leaked = 0;
  std::size_t leaked_initiator = 0;
  std::size_t leaked_middle = 0;
  std::size_t real_determined = 0;
};

struct LeakageReport {
  Config config;
  Coalition coalition;
  std::vector<LeakageVerdict> verdicts;  // one per outsider, ascending

  LeakageAggregates aggregates() const;
};

/// Analyzes an existing run; the verdicts' recovered values are checked
/// against the run's ground truth and a mismatch throws ProtocolError.
LeakageReport analyze_run(const RunResult& run, const Coalition& c);

LeakageReport leakage_report(const Config& config, std::span<const SecretInput> inputs,
                             const Coalition& c);

struct SweepEntry {
  Coalition coalition;
  LeakageVerdict verdict;
};

struct SweepResult {
  Config config;
  std::vector<SweepEntry> entries;  // coalition-major, victim-minor

  std::size_t leaked(VictimClass c) const;
  std::size_t observations(VictimClass c) const;
};

/// All 2-party coalitions against every outsider, on one run with inputs
/// drawn from config.master_seed. jobs > 1 splits coalitions across
/// threads; the result does not depend on jobs.
SweepResult exhaustive_pair_sweep(const Config& config, std::size_t jobs = 1);

struct ClassEstimate {
  std::size_t observations = 0;
  std::size_t leaks = 0;
  double probability = 0.0;
  double standard_error = 0.0;
};

struct MonteCarloResult {
  Config config;
  std::size_t trials = 0;
  std::size_t coalition_size = 0;
  std::uint64_t seed = 0;
  ClassEstimate initiator;
  ClassEstimate middle;
  ClassEstimate overall;
};

/// Each trial draws a fresh run and a uniform coalition of coalition_size;
/// every outsider is one observation for its victim class. Throws
/// ConfigError for trials == 0 or coalition_size outside [1, n-1].
MonteCarloResult monte_carlo_leakage(const Config& config, std::size_t trials,
                                     std::size_t coalition_size, std::uint64_t seed,
                                     std::size_t jobs = 1);

}  // namespace ckss
