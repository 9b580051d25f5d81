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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ckss/modular.h"
#include "ckss/topology.h"

namespace ckss {

/// One semi-honest participant. The initiator opens every round, absorbs
/// the round total when it comes back and announces at the end; every
/// other party adds its round segment to what it receives and forwards it
/// exactly once per round.
class Party {
 public:
  enum class State {
    kIdle,            // waiting for the next round
    kAwaitingReturn,  // initiator only: round opened, total not yet back
    kDone,            // initiator only: all rounds absorbed
  };

  /// masks holds one offset per round for a masked initiator, else empty.
  Party(PartyId id, std::vector<Residue> segments, std::vector<Residue> masks, Modulus m);

  PartyId id() const { return id_; }
  State state() const { return state_; }
  std::size_t rounds() const { return segments_.size(); }

  /// Initiator: emits V_1 for `round`. Rounds must be opened in order.
  Residue open_round(std::size_t round);

  /// Handles the value arriving in `round`. Non-initiators return the
  /// value to forward; the initiator absorbs the round total and returns
  /// nothing.
  std::optional<Residue> receive(std::size_t round, Residue value);

  /// Initiator after the final round: accumulated total minus masks.
  Residue announce() const;

 private:
  PartyId id_;
  std::vector<Residue> segments_;
  std::vector<Residue> masks_;
  Modulus modulus_;
  State state_ = State::kIdle;
  std::size_t last_round_ = 0;
  Residue total_ = 0;
};

}  // namespace ckss
