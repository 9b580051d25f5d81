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

#include "ckss/party.h"

#include <string>
#include <utility>

#include "ckss/errors.h"

namespace ckss {

Party::Party(PartyId id, std::vector<Residue> segments, std::vector<Residue> masks, Modulus m)
    : id_(id), segments_(std::move(segments)), masks_(std::move(masks)), modulus_(m) {
  if (!masks_.empty() && (!id_.is_initiator() || masks_.size() != segments_.size())) {
    throw ConfigError("only the initiator holds masks, one per round");
  }
}

Residue Party::open_round(std::size_t round) {
  if (!id_.is_initiator()) throw ProtocolError("only the initiator opens rounds");
  if (state_ != State::kIdle || round != last_round_ + 1 || round > rounds()) {
    throw ProtocolError("initiator cannot open round " + std::to_string(round));
  }
  state_ = State::kAwaitingReturn;
  last_round_ = round;
  const Residue first = segments_[round - 1];
  return masks_.empty() ? first : mod_add(masks_[round - 1], first, modulus_);
}

std::optional<Residue> Party::receive(std::size_t round, Residue value) {
  if (!modulus_.contains(value)) throw ProtocolError("received value is not reduced");
  if (id_.is_initiator()) {
    if (state_ != State::kAwaitingReturn || round != last_round_) {
      throw ProtocolError("initiator received an unexpected round total");
    }
    total_ = mod_add(total_, value, modulus_);
    state_ = round == rounds() ? State::kDone : State::kIdle;
    return std::nullopt;
  }
  if (round != last_round_ + 1 || round > rounds()) {
    throw ProtocolError("P" + std::to_string(id_.index) + " received twice or out of order in round " +
                        std::to_string(round));
  }
  last_round_ = round;
  return mod_add(value, segments_[round - 1], modulus_);
}

Residue Party::announce() const {
  if (state_ != State::kDone) throw ProtocolError("announce before the final round completed");
  Residue result = total_;
  for (Residue r : masks_) result = mod_sub(result, r, modulus_);
  return result;
}

}  // namespace ckss
