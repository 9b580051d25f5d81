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

// Ring arrangements per round and the P2 neighbor-exchange schedule.

#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

namespace ckss {

/// 1-based party index; P1 is always the protocol initiator.
struct PartyId {
  std::size_t index = 1;

  constexpr PartyId() = default;
  constexpr explicit PartyId(std::size_t i) : index(i) {}

  constexpr bool is_initiator() const { return index == 1; }

  friend constexpr auto operator<=>(PartyId, PartyId) = default;
};

inline constexpr PartyId kInitiator{1};

std::ostream& operator<<(std::ostream& os, PartyId p);

/// Minimum party count for the segmented protocols.
inline constexpr std::size_t kMinSegmentedParties = 4;

/// Parties in ring order. Positions are 1-based; position 1 holds the
/// initiator and the successor of the last position is position 1.
class RingOrder {
 public:
  RingOrder() = default;
  /// Throws ConfigError unless `order` is a permutation of P1..Pn.
  explicit RingOrder(std::vector<PartyId> order);

  std::size_t size() const { return order_.size(); }
  PartyId at(std::size_t position) const { return order_.at(position - 1); }
  /// 1-based position of p; throws ConfigError if p is not in the ring.
  std::size_t position_of(PartyId p) const;

  const std::vector<PartyId>& parties() const { return order_; }

  /// Exchanges the positions of a and b.
  void swap_parties(PartyId a, PartyId b);

  friend bool operator==(const RingOrder&, const RingOrder&) = default;

 private:
  std::vector<PartyId> order_;
};

std::ostream& operator<<(std::ostream& os, const RingOrder& order);

struct Swap {
  std::size_t after_round = 0;
  PartyId a;
  PartyId b;

  friend bool operator==(const Swap&, const Swap&) = default;
};

using ExchangeSchedule = std::vector<Swap>;

struct Neighbors {
  PartyId pred;
  PartyId succ;

  friend auto operator<=>(const Neighbors&, const Neighbors&) = default;
};

/// [P1, P2, ..., Pn]. Throws TooFewParties for n < 4.
RingOrder initial_order(std::size_t n);

/// Ring 1..n without the segmented-protocol minimum; used by the Clifton
/// baseline. Throws TooFewParties for n < 3.
RingOrder fixed_ring(std::size_t n);

/// After round j (j = 1..n-2), P2 swaps with P_{j+2}. No swap follows the
/// final round, so the schedule has exactly n-2 entries.
ExchangeSchedule exchange_schedule(std::size_t n);

/// initial_order(n) with the first j-1 swaps applied. Throws ConfigError
/// unless 1 <= j <= n-1.
RingOrder order_for_round(std::size_t n, std::size_t j);

/// All n-1 round orders, equivalent to order_for_round for j = 1..n-1.
std::vector<RingOrder> all_round_orders(std::size_t n);

/// Cyclic predecessor and successor of p.
Neighbors neighbors(const RingOrder& order, PartyId p);

}  // namespace ckss
