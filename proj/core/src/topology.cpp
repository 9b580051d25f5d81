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

#include "ckss/topology.h"

#include <algorithm>
#include <string>

#include "ckss/errors.h"

namespace ckss {

std::ostream& operator<<(std::ostream& os, PartyId p) { return os << 'P' << p.index; }

RingOrder::RingOrder(std::vector<PartyId> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size() + 1, false);
  for (PartyId p : order_) {
    if (p.index < 1 || p.index > order_.size() || seen[p.index]) {
      throw ConfigError("ring order is not a permutation of P1..P" +
                        std::to_string(order_.size()));
    }
    seen[p.index] = true;
  }
}

std::size_t RingOrder::position_of(PartyId p) const {
  auto it = std::find(order_.begin(), order_.end(), p);
  if (it == order_.end()) {
    throw ConfigError("party P" + std::to_string(p.index) + " is not in the ring");
  }
  return static_cast<std::size_t>(it - order_.begin()) + 1;
}

void RingOrder::swap_parties(PartyId a, PartyId b) {
  std::swap(order_[position_of(a) - 1], order_[position_of(b) - 1]);
}

std::ostream& operator<<(std::ostream& os, const RingOrder& order) {
  os << '[';
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) os << ',';
    os << order.parties()[i];
  }
  return os << ']';
}

namespace {

RingOrder sequential(std::size_t n) {
  std::vector<PartyId> parties;
  parties.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) parties.emplace_back(i);
  return RingOrder(std::move(parties));
}

void require_segmented(std::size_t n) {
  if (n < kMinSegmentedParties) {
    throw TooFewParties("need at least " + std::to_string(kMinSegmentedParties) +
                        " parties, got " + std::to_string(n));
  }
}

}  // namespace

RingOrder initial_order(std::size_t n) {
  require_segmented(n);
  return sequential(n);
}

RingOrder fixed_ring(std::size_t n) {
  if (n < 3) throw TooFewParties("need at least 3 parties, got " + std::to_string(n));
  return sequential(n);
}

ExchangeSchedule exchange_schedule(std::size_t n) {
  require_segmented(n);
  ExchangeSchedule swaps;
  swaps.reserve(n - 2);
  for (std::size_t j = 1; j + 2 <= n; ++j) swaps.push_back({j, PartyId{2}, PartyId{j + 2}});
  return swaps;
}

RingOrder order_for_round(std::size_t n, std::size_t j) {
  RingOrder order = initial_order(n);
  if (j < 1 || j > n - 1) {
    throw ConfigError("round " + std::to_string(j) + " outside 1.." + std::to_string(n - 1));
  }
  const ExchangeSchedule swaps = exchange_schedule(n);
  for (std::size_t s = 0; s + 1 < j; ++s) order.swap_parties(swaps[s].a, swaps[s].b);
  return order;
}

std::vector<RingOrder> all_round_orders(std::size_t n) {
  std::vector<RingOrder> orders;
  RingOrder order = initial_order(n);
  const ExchangeSchedule swaps = exchange_schedule(n);
  orders.push_back(order);
  for (const Swap& s : swaps) {
    order.swap_parties(s.a, s.b);
    orders.push_back(order);
  }
  return orders;
}

Neighbors neighbors(const RingOrder& order, PartyId p) {
  const std::size_t pos = order.position_of(p);
  const std::size_t n = order.size();
  const std::size_t pred = pos == 1 ? n : pos - 1;
  const std::size_t succ = pos == n ? 1 : pos + 1;
  return {order.at(pred), order.at(succ)};
}

}  // namespace ckss
