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

// Protocol execution: party state machines on a lock-step ring scheduler.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ckss/modular.h"
#include "ckss/shares.h"
#include "ckss/topology.h"

namespace ckss {

enum class ProtocolKind {
  kCliftonSum,   // one pass, random mask at the initiator
  kKSecureSum,   // k = n-1 segment rounds on a fixed ring
  kCkSecureSum,  // k = n-1 segment rounds, P2 changes position between rounds
};

/// "clifton", "ksecure" or "ck".
std::string_view to_string(ProtocolKind kind);
/// Inverse of to_string; throws ConfigError on an unknown name.
ProtocolKind parse_protocol_kind(std::string_view name);

struct Config {
  std::size_t n = kMinSegmentedParties;
  Modulus modulus{};
  ProtocolKind kind = ProtocolKind::kCkSecureSum;
  std::uint64_t master_seed = 0;
  /// Per-round random offset at the initiator for the segmented kinds.
  /// Clifton always masks.
  bool initiator_mask = false;

  /// Throws TooFewParties / ConfigError.
  void validate() const;

  bool segmented() const { return kind != ProtocolKind::kCliftonSum; }
  std::size_t segments_per_party() const { return segmented() ? n - 1 : 1; }
  std::size_t rounds() const { return segments_per_party(); }
  bool masked() const { return !segmented() || initiator_mask; }

  friend bool operator==(const Config&, const Config&) = default;
};

struct Message {
  std::size_t round = 0;  // 1-based
  std::size_t hop = 0;    // 1-based, hop h is sent by the party at position h
  PartyId sender;
  PartyId receiver;
  Residue value = 0;

  friend bool operator==(const Message&, const Message&) = default;
};

struct Transcript {
  Config config;
  std::vector<RingOrder> orders;  // one per round
  std::vector<Message> messages;  // round-major, hop-minor
  Residue announced = 0;

  /// Message for (round, hop) in a structurally valid transcript.
  const Message& message(std::size_t round, std::size_t hop) const {
    return messages.at((round - 1) * config.n + (hop - 1));
  }

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

/// Segment d_{i,j} for each party i and segment (round) j.
class SegmentMatrix {
 public:
  SegmentMatrix() = default;
  SegmentMatrix(std::size_t parties, std::size_t segments)
      : parties_(parties), segments_(segments), data_(parties * segments, 0) {}

  std::size_t parties() const { return parties_; }
  std::size_t segments() const { return segments_; }

  Residue at(PartyId p, std::size_t segment) const {
    return data_.at(offset(p, segment));
  }
  void set(PartyId p, std::size_t segment, Residue v) { data_.at(offset(p, segment)) = v; }

  std::span<const Residue> row(PartyId p) const {
    return std::span<const Residue>(data_).subspan(offset(p, 1), segments_);
  }

  /// Segment j of every party, indexed by party id - 1.
  std::vector<Residue> column(std::size_t segment) const;

  friend bool operator==(const SegmentMatrix&, const SegmentMatrix&) = default;

 private:
  std::size_t offset(PartyId p, std::size_t segment) const {
    return (p.index - 1) * segments_ + (segment - 1);
  }

  std::size_t parties_ = 0;
  std::size_t segments_ = 0;
  std::vector<Residue> data_;
};

struct RunResult {
  Residue announced = 0;
  Transcript transcript;
  /// Ground truth, used for verification and for coalition members' own
  /// knowledge. Never part of the transcript.
  SegmentMatrix segments;
  std::vector<Residue> masks;  // initiator masks per round; empty if unmasked
};

struct Metrics {
  std::size_t rounds = 0;
  std::size_t messages = 0;
  std::size_t exchanges = 0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

/// Runs one protocol instance. inputs[i] must belong to P_{i+1}.
RunResult run_protocol(const Config& config, std::span<const SecretInput> inputs);

/// Convenience overload taking raw values for P1..Pn.
RunResult run_protocol(const Config& config, std::span<const Residue> values);

/// Inputs drawn uniformly from [0, M) using a stream reserved for inputs.
std::vector<SecretInput> random_inputs(std::size_t n, const Modulus& m, std::uint64_t seed);

/// Hop values of one round: V_t = offset + sum of the segments of the
/// parties at positions 1..t. round_segments is indexed by party id - 1.
std::vector<Residue> round_values(const RingOrder& order,
                                  std::span<const Residue> round_segments, const Modulus& m,
                                  Residue offset = 0);

/// Throws ProtocolError when the transcript breaks a structural invariant.
void validate_transcript(const Transcript& t);

/// Counts from the transcript alone. Throws ProtocolError when malformed.
Metrics compute_metrics(const Transcript& t);

/// Line-oriented text form, stable across platforms.
std::string serialize_transcript(const Transcript& t);
/// Throws ParseError on malformed input.
Transcript parse_transcript(std::string_view text);

}  // namespace ckss
