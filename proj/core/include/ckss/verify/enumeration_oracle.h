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

// Exhaustive-enumeration ground truth for small moduli.
//
// Decides determinacy by listing every assignment of the unknowns that is
// consistent with a view, with no linear algebra. Unknowns are grouped
// into blocks connected by the non-announced equations (one block per
// round for these protocols); each block is enumerated exhaustively, and
// blocks are joined through the announced-sum equation by combining
// (target value, block contribution to the sum) pairs.

#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "ckss/adversary.h"

namespace ckss::verify {

class EnumerationOracle {
 public:
  /// Throws ConfigError if the modulus exceeds max_modulus or a block has
  /// more than max_free_unknowns unconstrained unknowns.
  explicit EnumerationOracle(const CoalitionView& view, Residue max_modulus = 7,
                             std::size_t max_free_unknowns = 10);

  /// True iff target takes a single value over all consistent assignments.
  bool determined(const LinearForm& target) const;

  /// Every value target takes over the consistent assignments.
  std::set<Residue> values(const LinearForm& target) const;

  std::size_t blocks() const { return blocks_.size(); }

 private:
  struct Block {
    std::vector<std::size_t> unknowns;
    std::vector<std::vector<Residue>> solutions;  // aligned with unknowns
  };

  Modulus modulus_;
  std::size_t width_ = 0;
  LinearForm sum_form_;
  Residue sum_value_ = 0;
  bool has_sum_ = false;
  std::vector<Block> blocks_;
};

}  // namespace ckss::verify
