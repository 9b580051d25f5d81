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

#include "ckss/modular.h"

#include <string>

#include "ckss/errors.h"

namespace ckss {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod_raw(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod_raw(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod_raw(result, base, m);
    base = mul_mod_raw(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (value % p == 0) return value == p;
  }
  std::uint64_t d = value - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set below 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod_raw(a, d, value);
    if (x == 1 || x == value - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod_raw(x, x, value);
      if (x == value - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Modulus::Modulus(Residue value) : value_(value), prime_(is_prime(value)) {
  if (value < 2) throw ConfigError("modulus must be at least 2, got " + std::to_string(value));
}

void Modulus::require_prime() const {
  if (!prime_) throw ConfigError("modulus " + std::to_string(value_) + " is not prime");
}

Residue mod_add(Residue a, Residue b, const Modulus& m) {
  const Residue gap = m.value() - b;
  return a >= gap ? a - gap : a + b;
}

Residue mod_sub(Residue a, Residue b, const Modulus& m) {
  return a >= b ? a - b : a + (m.value() - b);
}

Residue mod_neg(Residue a, const Modulus& m) { return a == 0 ? 0 : m.value() - a; }

Residue mod_mul(Residue a, Residue b, const Modulus& m) { return mul_mod_raw(a, b, m.value()); }

Residue mod_pow(Residue base, std::uint64_t exp, const Modulus& m) {
  return pow_mod_raw(base, exp, m.value());
}

Residue mod_inv(Residue a, const Modulus& m) {
  m.require_prime();
  if (a % m.value() == 0) throw ConfigError("zero has no inverse");
  return pow_mod_raw(a, m.value() - 2, m.value());
}

Residue mod_sum(std::span<const Residue> values, const Modulus& m) {
  Residue acc = 0;
  for (Residue v : values) acc = mod_add(acc, v, m);
  return acc;
}

}  // namespace ckss
