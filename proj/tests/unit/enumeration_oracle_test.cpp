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

#include "ckss/verify/enumeration_oracle.h"

#include <gtest/gtest.h>

#include "ckss/errors.h"

namespace ckss::verify {
namespace {

// Hand-built views over a tiny layout: 2 parties x 1 segment, no masks.
CoalitionView tiny_view(std::vector<Equation> eqs, Residue m = 5) {
  CoalitionView v;
  v.layout = UnknownLayout(2, 1, 0);
  v.modulus = Modulus(m);
  v.equations = std::move(eqs);
  return v;
}

Equation eq(LinearForm f, Residue c, Equation::Source s = Equation::Source::kMessage) {
  Equation e;
  e.coefficients = std::move(f);
  e.constant = c;
  e.source = s;
  return e;
}

TEST(EnumerationOracleTest, EmptyViewDeterminesNothing) {
  const EnumerationOracle o(tiny_view({}));
  EXPECT_FALSE(o.determined({1, 0}));
  EXPECT_EQ(o.values({1, 0}).size(), 5u);
  EXPECT_TRUE(o.determined({0, 0}));
}

TEST(EnumerationOracleTest, SumAloneDeterminesOnlyTheSum) {
  const EnumerationOracle o(tiny_view({eq({1, 1}, 3, Equation::Source::kAnnouncedSum)}));
  EXPECT_FALSE(o.determined({1, 0}));
  EXPECT_TRUE(o.determined({1, 1}));
  EXPECT_EQ(o.values({2, 2}), (std::set<Residue>{1}));
}

TEST(EnumerationOracleTest, PinnedUnknownPlusSum) {
  const EnumerationOracle o(
      tiny_view({eq({1, 0}, 4), eq({1, 1}, 1, Equation::Source::kAnnouncedSum)}));
  EXPECT_EQ(o.values({0, 1}), (std::set<Residue>{2}));
}

TEST(EnumerationOracleTest, InconsistentViewThrows) {
  EXPECT_THROW(EnumerationOracle(tiny_view({eq({1, 0}, 1), eq({1, 0}, 2)})), ProtocolError);
}

TEST(EnumerationOracleTest, RejectsLargeModulus) {
  EXPECT_THROW(EnumerationOracle(tiny_view({}, 97)), ConfigError);
}

TEST(EnumerationOracleTest, MultiBlockJoinThroughSum) {
  // Layout 2 parties x 2 segments. Blocks {d11,d21} and {d12,d22} with
  // d11 + d21 = 3 observed; sum pins d12 + d22 = total - 3.
  CoalitionView v;
  v.layout = UnknownLayout(2, 2, 0);
  v.modulus = Modulus(5);
  // slots: d11=0, d12=1, d21=2, d22=3
  v.equations.push_back(eq({1, 0, 1, 0}, 3));
  v.equations.push_back(eq({0, 1, 0, 0}, 2));
  v.equations.push_back(eq({1, 1, 1, 1}, 0, Equation::Source::kAnnouncedSum));
  const EnumerationOracle o(v);
  EXPECT_EQ(o.blocks(), 3u);  // {d11,d21}, {d12}, {d22}
  EXPECT_EQ(o.values({0, 0, 0, 1}), (std::set<Residue>{0}));  // d22 = 0 - 3 - 2
  EXPECT_FALSE(o.determined({1, 0, 0, 0}));
  EXPECT_TRUE(o.determined({1, 0, 1, 0}));
}

}  // namespace
}  // namespace ckss::verify
