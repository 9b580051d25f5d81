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

#include <gtest/gtest.h>

#include "ckss/errors.h"

namespace ckss {
namespace {

TEST(ModularTest, AddExamples) {
  const Modulus m{97};
  EXPECT_EQ(mod_add(0, 0, m), 0u);
  EXPECT_EQ(mod_add(96, 5, m), 4u);
  EXPECT_EQ(mod_add(60, 60, m), 23u);
}

TEST(ModularTest, AddNeverOverflowsNearWordSize) {
  const Residue top = ~Residue{0} - 58;  // 2^64 - 59
  const Modulus m{top};
  EXPECT_TRUE(m.prime());
  EXPECT_EQ(mod_add(top - 1, top - 1, m), top - 2);
  EXPECT_EQ(mod_add(top - 1, 1, m), 0u);
  EXPECT_EQ(mod_sub(0, 1, m), top - 1);
  EXPECT_EQ(mod_mul(top - 1, top - 1, m), 1u);
}

TEST(ModularTest, SubAndNeg) {
  const Modulus m{97};
  EXPECT_EQ(mod_sub(3, 5, m), 95u);
  EXPECT_EQ(mod_neg(0, m), 0u);
  EXPECT_EQ(mod_add(mod_neg(40, m), 40, m), 0u);
}

TEST(ModularTest, InverseOverPrimeField) {
  const Modulus m{kDefaultModulus};
  for (Residue a : {Residue{1}, Residue{2}, Residue{12345}, kDefaultModulus - 1}) {
    EXPECT_EQ(mod_mul(a, mod_inv(a, m), m), 1u) << a;
  }
  EXPECT_THROW(mod_inv(0, m), ConfigError);
  EXPECT_THROW(mod_inv(3, Modulus{12}), ConfigError);
}

TEST(ModularTest, PrimalityAgreesWithTrialDivision) {
  auto slow = [](std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
      if (v % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t v = 0; v < 5000; ++v) ASSERT_EQ(is_prime(v), slow(v)) << v;
  EXPECT_TRUE(is_prime(kDefaultModulus));
  EXPECT_FALSE(is_prime(kDefaultModulus + 2));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(ModularTest, ModulusValidation) {
  EXPECT_THROW(Modulus{0}, ConfigError);
  EXPECT_THROW(Modulus{1}, ConfigError);
  EXPECT_NO_THROW(Modulus{2});
  EXPECT_EQ(Modulus{}.value(), kDefaultModulus);
  EXPECT_THROW(Modulus{91}.require_prime(), ConfigError);
  EXPECT_NO_THROW(Modulus{97}.require_prime());
}

TEST(ModularTest, SumOfSpan) {
  const Modulus m{97};
  const std::vector<Residue> v{96, 96};
  EXPECT_EQ(mod_sum(v, m), 95u);
}

}  // namespace
}  // namespace ckss
