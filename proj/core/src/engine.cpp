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

#include "ckss/engine.h"

#include <charconv>
#include <deque>
#include <set>
#include <sstream>
#include <string>

#include "ckss/errors.h"
#include "ckss/party.h"

namespace ckss {

std::string_view to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::kCliftonSum:
      return "clifton";
    case ProtocolKind::kKSecureSum:
      return "ksecure";
    case ProtocolKind::kCkSecureSum:
      return "ck";
  }
  return "unknown";
}

ProtocolKind parse_protocol_kind(std::string_view name) {
  if (name == "clifton") return ProtocolKind::kCliftonSum;
  if (name == "ksecure") return ProtocolKind::kKSecureSum;
  if (name == "ck") return ProtocolKind::kCkSecureSum;
  throw ConfigError("unknown protocol '" + std::string(name) + "' (expected clifton|ksecure|ck)");
}

void Config::validate() const {
  if (segmented()) {
    if (n < kMinSegmentedParties) {
      throw TooFewParties(std::string(to_string(kind)) + " needs at least 4 parties, got " +
                          std::to_string(n));
    }
  } else if (n < 3) {
    throw TooFewParties("clifton needs at least 3 parties, got " + std::to_string(n));
  }
}

std::vector<Residue> SegmentMatrix::column(std::size_t segment) const {
  std::vector<Residue> out;
  out.reserve(parties_);
  for (std::size_t i = 1; i <= parties_; ++i) out.push_back(at(PartyId{i}, segment));
  return out;
}

namespace {

std::vector<RingOrder> orders_for(const Config& c) {
  switch (c.kind) {
    case ProtocolKind::kCliftonSum:
      return {fixed_ring(c.n)};
    case ProtocolKind::kKSecureSum:
      return std::vector<RingOrder>(c.rounds(), initial_order(c.n));
    case ProtocolKind::kCkSecureSum:
      return all_round_orders(c.n);
  }
  throw ConfigError("unknown protocol kind");
}

struct Delivery {
  std::size_t hop;
  PartyId sender;
  PartyId receiver;
  Residue value;
};

// Lock-step ring scheduler: one message in flight at a time, delivered in
// hop order, rounds strictly sequential.
class RingScheduler {
 public:
  RingScheduler(std::vector<Party>& parties, const Modulus& m) : parties_(parties), modulus_(m) {}

  void run_round(std::size_t round, const RingOrder& order, std::vector<Message>& log) {
    const std::size_t n = order.size();
    Party& initiator = party(order.at(1));
    pending_.push_back({1, order.at(1), order.at(2), initiator.open_round(round)});
    while (!pending_.empty()) {
      const Delivery d = pending_.front();
      pending_.pop_front();
      log.push_back({round, d.hop, d.sender, d.receiver, d.value});
      std::optional<Residue> out = party(d.receiver).receive(round, d.value);
      if (!out) continue;
      const std::size_t next_hop = d.hop + 1;
      if (next_hop > n) throw ProtocolError("round did not close at the initiator");
      const PartyId next = order.at(next_hop == n ? 1 : next_hop + 1);
      pending_.push_back({next_hop, d.receiver, next, *out});
    }
    if (log.size() != round * n) throw ProtocolError("round produced the wrong message count");
  }

 private:
  Party& party(PartyId p) { return parties_.at(p.index - 1); }

  std::vector<Party>& parties_;
  Modulus modulus_;
  std::deque<Delivery> pending_;
};

}  // namespace

RunResult run_protocol(const Config& config, std::span<const SecretInput> inputs) {
  config.validate();
  if (inputs.size() != config.n) {
    throw ConfigError("expected " + std::to_string(config.n) + " inputs, got " +
                      std::to_string(inputs.size()));
  }
  const Modulus& m = config.modulus;
  const std::size_t k = config.segments_per_party();

  RunResult result;
  result.segments = SegmentMatrix(config.n, k);
  std::vector<Party> parties;
  parties.reserve(config.n);
  for (std::size_t i = 1; i <= config.n; ++i) {
    const SecretInput& x = inputs[i - 1];
    if (x.party != PartyId{i}) {
      throw ConfigError("input " + std::to_string(i) + " belongs to P" +
                        std::to_string(x.party.index));
    }
    RandomStream rng = RandomStream::for_party(config.master_seed, i);
    SegmentVector sv = make_segments(x, k, m, rng);
    for (std::size_t j = 1; j <= k; ++j) result.segments.set(x.party, j, sv.segments[j - 1]);
    std::vector<Residue> masks;
    if (i == 1 && config.masked()) {
      for (std::size_t j = 0; j < config.rounds(); ++j) masks.push_back(rng.uniform_below(m.value()));
      result.masks = masks;
    }
    parties.emplace_back(PartyId{i}, std::move(sv.segments), std::move(masks), m);
  }

  Transcript& t = result.transcript;
  t.config = config;
  t.orders = orders_for(config);
  t.messages.reserve(config.rounds() * config.n);
  RingScheduler scheduler(parties, m);
  for (std::size_t round = 1; round <= config.rounds(); ++round) {
    scheduler.run_round(round, t.orders[round - 1], t.messages);
  }
  t.announced = parties.front().announce();
  result.announced = t.announced;
  return result;
}

RunResult run_protocol(const Config& config, std::span<const Residue> values) {
  std::vector<SecretInput> inputs;
  inputs.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) inputs.push_back({PartyId{i + 1}, values[i]});
  return run_protocol(config, inputs);
}

std::vector<SecretInput> random_inputs(std::size_t n, const Modulus& m, std::uint64_t seed) {
  // Stream 0 is never a party id, so inputs stay independent of segments.
  RandomStream rng = RandomStream::for_party(seed, 0);
  std::vector<SecretInput> inputs;
  inputs.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) inputs.push_back({PartyId{i}, rng.uniform_below(m.value())});
  return inputs;
}

std::vector<Residue> round_values(const RingOrder& order, std::span<const Residue> round_segments,
                                  const Modulus& m, Residue offset) {
  if (round_segments.size() != order.size()) {
    throw ConfigError("need one segment per party: " + std::to_string(order.size()) +
                      " parties, " + std::to_string(round_segments.size()) + " segments");
  }
  std::vector<Residue> values;
  values.reserve(order.size());
  Residue acc = offset;
  for (PartyId p : order.parties()) {
    acc = mod_add(acc, round_segments[p.index - 1], m);
    values.push_back(acc);
  }
  return values;
}

void validate_transcript(const Transcript& t) {
  const Config& c = t.config;
  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw ProtocolError(std::string("transcript config: ") + e.what());
  }
  const std::size_t n = c.n;
  if (t.orders.size() != c.rounds()) {
    throw ProtocolError("transcript has " + std::to_string(t.orders.size()) + " round orders, expected " +
                        std::to_string(c.rounds()));
  }
  for (const RingOrder& o : t.orders) {
    if (o.size() != n || o.at(1) != kInitiator) {
      throw ProtocolError("round order must hold n parties with P1 first");
    }
  }
  if (t.messages.size() != c.rounds() * n) {
    throw ProtocolError("transcript has " + std::to_string(t.messages.size()) + " messages, expected " +
                        std::to_string(c.rounds() * n));
  }
  for (std::size_t r = 1; r <= c.rounds(); ++r) {
    const RingOrder& o = t.orders[r - 1];
    for (std::size_t h = 1; h <= n; ++h) {
      const Message& msg = t.message(r, h);
      if (msg.round != r || msg.hop != h || msg.sender != o.at(h) ||
          msg.receiver != o.at(h == n ? 1 : h + 1)) {
        throw ProtocolError("message " + std::to_string(r) + "/" + std::to_string(h) +
                            " does not follow the ring");
      }
      if (!c.modulus.contains(msg.value)) throw ProtocolError("message value is not reduced");
    }
  }
  if (!c.modulus.contains(t.announced)) throw ProtocolError("announced value is not reduced");
}

Metrics compute_metrics(const Transcript& t) {
  validate_transcript(t);
  Metrics m;
  std::set<std::size_t> rounds;
  for (const Message& msg : t.messages) rounds.insert(msg.round);
  m.rounds = rounds.size();
  m.messages = t.messages.size();
  for (std::size_t r = 1; r < t.orders.size(); ++r) {
    const auto& a = t.orders[r - 1].parties();
    const auto& b = t.orders[r].parties();
    std::vector<std::size_t> diff;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) diff.push_back(i);
    }
    if (diff.empty()) continue;
    if (diff.size() != 2 || a[diff[0]] != b[diff[1]] || a[diff[1]] != b[diff[0]]) {
      throw ProtocolError("orders of rounds " + std::to_string(r) + " and " + std::to_string(r + 1) +
                          " differ by more than one exchange");
    }
    ++m.exchanges;
  }
  return m;
}

std::string serialize_transcript(const Transcript& t) {
  std::ostringstream os;
  const Config& c = t.config;
  os << "ckss-transcript 1\n"
     << "protocol " << to_string(c.kind) << '\n'
     << "n " << c.n << '\n'
     << "modulus " << c.modulus.value() << '\n'
     << "seed " << c.master_seed << '\n'
     << "initiator_mask " << (c.initiator_mask ? 1 : 0) << '\n'
     << "rounds " << t.orders.size() << '\n';
  for (std::size_t r = 0; r < t.orders.size(); ++r) {
    os << "order " << r + 1;
    for (PartyId p : t.orders[r].parties()) os << ' ' << p.index;
    os << '\n';
  }
  os << "messages " << t.messages.size() << '\n';
  for (const Message& m : t.messages) {
    os << m.round << ' ' << m.hop << ' ' << m.sender.index << ' ' << m.receiver.index << ' '
       << m.value << '\n';
  }
  os << "announced " << t.announced << '\n';
  return os.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::vector<std::string_view> next() {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of transcript");
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    std::string_view line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++line_no_;
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && line[i] == ' ') ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ') ++j;
      if (j > i) fields.push_back(line.substr(i, j - i));
      i = j;
    }
    return fields;
  }

  std::vector<std::string_view> expect(std::string_view key, std::size_t values) {
    auto f = next();
    if (f.size() != values + 1 || f[0] != key) fail("expected '" + std::string(key) + "'");
    return f;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("transcript line " + std::to_string(line_no_) + ": " + what);
  }

  std::uint64_t number(std::string_view field) const {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      fail("bad number '" + std::string(field) + "'");
    }
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

}  // namespace

Transcript parse_transcript(std::string_view text) {
  LineReader in(text);
  Transcript t;
  auto magic = in.expect("ckss-transcript", 1);
  if (magic[1] != "1") in.fail("unsupported transcript version");
  try {
    t.config.kind = parse_protocol_kind(in.expect("protocol", 1)[1]);
    t.config.n = in.number(in.expect("n", 1)[1]);
    t.config.modulus = Modulus(in.number(in.expect("modulus", 1)[1]));
  } catch (const ConfigError& e) {
    in.fail(e.what());
  }
  t.config.master_seed = in.number(in.expect("seed", 1)[1]);
  const std::uint64_t mask = in.number(in.expect("initiator_mask", 1)[1]);
  if (mask > 1) in.fail("initiator_mask must be 0 or 1");
  t.config.initiator_mask = mask == 1;

  const std::uint64_t rounds = in.number(in.expect("rounds", 1)[1]);
  if (rounds > t.config.n) in.fail("too many rounds");
  for (std::uint64_t r = 1; r <= rounds; ++r) {
    auto f = in.expect("order", t.config.n + 1);
    if (in.number(f[1]) != r) in.fail("orders out of sequence");
    std::vector<PartyId> parties;
    for (std::size_t i = 2; i < f.size(); ++i) parties.emplace_back(in.number(f[i]));
    try {
      t.orders.emplace_back(std::move(parties));
    } catch (const ConfigError& e) {
      in.fail(e.what());
    }
  }
  const std::uint64_t count = in.number(in.expect("messages", 1)[1]);
  if (count != rounds * t.config.n) in.fail("message count does not match rounds * n");
  t.messages.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    auto f = in.next();
    if (f.size() != 5) in.fail("message needs 5 fields");
    t.messages.push_back({in.number(f[0]), in.number(f[1]), PartyId{in.number(f[2])},
                          PartyId{in.number(f[3])}, in.number(f[4])});
  }
  t.announced = in.number(in.expect("announced", 1)[1]);
  if (!in.at_end()) in.fail("trailing content after announced");
  try {
    validate_transcript(t);
  } catch (const ProtocolError& e) {
    throw ParseError(std::string("invalid transcript: ") + e.what());
  }
  return t;
}

}  // namespace ckss
