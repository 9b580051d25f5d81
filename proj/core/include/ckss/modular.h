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

// Residue arithmetic over Z_M for a runtime modulus M.

#pragma once

#include <cstdint>
#include <span>

namespace ckss {

using Residue = std::uint64_t;

/// Mersenne prime 2^61 - 1; the default ring size.
inline constexpr Residue kDefaultModulus = (Residue{1} << 61) - 1;

/// Deterministic Miller-Rabin, exact for every 64-bit value.
bool is_prime(std::uint64_t value);

class Modulus {
 public:
  /// Throws ConfigError when value < 2.
  explicit Modulus(Residue value = kDefaultModulus);

  Residue value() const { return value_; }
  bool prime() const { return prime_; }

  /// Throws ConfigError unless the modulus is prime.
  void require_prime() const;

  bool contains(Residue r) const { return r < value_; }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Residue value_;
  bool prime_;
};

// All operands must already be reduced (< M). None of these overflow for
// any 64-bit modulus.
Residue mod_add(Residue a, Residue b, const Modulus& m);
Residue mod_sub(Residue a, Residue b, const Modulus& m);
Residue mod_neg(Residue a, const Modulus& m);
Residue mod_mul(Residue a, Residue b, const Modulus& m);
Residue mod_pow(Residue base, std::uint64_t exp, const Modulus& m);
/// Multiplicative inverse via Fermat; requires prime M and a != 0.
Residue mod_inv(Residue a, const Modulus& m);

/// Reduces an arbitrary 64-bit integer into [0, M).
inline Residue reduce(std::uint64_t x, const Modulus& m) { return x % m.value(); }

Residue mod_sum(std::span<const Residue> values, const Modulus& m);

}  // namespace ckss
