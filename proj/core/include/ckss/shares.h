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

// Additive secret sharing of party inputs into segments.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ckss/modular.h"
#include "ckss/topology.h"

namespace ckss {

/// splitmix64 finalizer applied to (seed, stream); used to derive
/// independent per-party streams from one master seed.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream_id);

/// A seedable random stream. std::mt19937_64 output is fixed by the
/// standard, and uniform_below() is our own rejection sampler, so draws are
/// bit-identical on every platform.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for `stream_id` under `master_seed`.
  static RandomStream for_party(std::uint64_t master_seed, std::uint64_t stream_id) {
    return RandomStream(derive_seed(master_seed, stream_id));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [0, bound). bound must be >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

struct SecretInput {
  PartyId party;
  Residue value = 0;
};

struct SegmentVector {
  PartyId party;
  std::vector<Residue> segments;
};

/// Splits x into k additive shares: the first k-1 uniform on [0, M), the
/// last forced so the shares sum to x mod M. Throws ConfigError for k == 0
/// or x out of range.
SegmentVector make_segments(const SecretInput& x, std::size_t k, const Modulus& m,
                            RandomStream& rng);

/// Mod-M sum of the segments. Throws ConfigError on an empty list.
Residue recombine(const SegmentVector& sv, const Modulus& m);

}  // namespace ckss
