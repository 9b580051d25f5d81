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

#include "ckss/shares.h"

#include <limits>
#include <string>

#include "ckss/errors.h"

namespace ckss {

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_id) {
  std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (stream_id + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t RandomStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw ConfigError("uniform_below: bound must be positive");
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

SegmentVector make_segments(const SecretInput& x, std::size_t k, const Modulus& m,
                            RandomStream& rng) {
  if (k == 0) throw ConfigError("segment count must be at least 1");
  if (!m.contains(x.value)) {
    throw ConfigError("input " + std::to_string(x.value) + " of party " +
                      std::to_string(x.party.index) + " is not below the modulus");
  }
  SegmentVector sv{x.party, {}};
  sv.segments.reserve(k);
  Residue drawn = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Residue s = rng.uniform_below(m.value());
    drawn = mod_add(drawn, s, m);
    sv.segments.push_back(s);
  }
  sv.segments.push_back(mod_sub(x.value, drawn, m));
  return sv;
}

Residue recombine(const SegmentVector& sv, const Modulus& m) {
  if (sv.segments.empty()) throw ConfigError("cannot recombine an empty segment list");
  return mod_sum(sv.segments, m);
}

}  // namespace ckss
