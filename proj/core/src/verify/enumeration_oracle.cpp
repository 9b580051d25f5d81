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

#include <algorithm>
#include <numeric>
#include <string>

#include "ckss/errors.h"

namespace ckss::verify {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

struct LocalEquation {
  std::vector<std::pair<std::size_t, Residue>> terms;  // (local index, coefficient)
  Residue constant = 0;
};

// Depth-first enumeration with forced substitution: the next unknown is
// always one from an equation with the fewest unassigned unknowns, so
// single-unknown equations pin values before branching.
class BlockEnumerator {
 public:
  BlockEnumerator(std::size_t unknowns, std::vector<LocalEquation> eqs, const Modulus& m,
                  std::size_t limit)
      : m_(m), eqs_(std::move(eqs)), limit_(limit), value_(unknowns, 0), assigned_(unknowns, false) {}

  std::vector<std::vector<Residue>> run() {
    descend(0);
    return std::move(solutions_);
  }

 private:
  std::size_t pick() const {
    std::size_t best = value_.size();
    std::size_t best_open = SIZE_MAX;
    for (const LocalEquation& e : eqs_) {
      std::size_t open = 0;
      std::size_t first = value_.size();
      for (auto [v, c] : e.terms) {
        if (!assigned_[v]) {
          ++open;
          first = std::min(first, v);
        }
      }
      if (open > 0 && open < best_open) {
        best_open = open;
        best = first;
      }
    }
    if (best != value_.size()) return best;
    for (std::size_t v = 0; v < value_.size(); ++v) {
      if (!assigned_[v]) return v;
    }
    return value_.size();
  }

  bool consistent() const {
    for (const LocalEquation& e : eqs_) {
      Residue acc = 0;
      bool complete = true;
      for (auto [v, c] : e.terms) {
        if (!assigned_[v]) {
          complete = false;
          break;
        }
        acc = mod_add(acc, mod_mul(c, value_[v], m_), m_);
      }
      if (complete && acc != e.constant) return false;
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (depth == value_.size()) {
      if (solutions_.size() >= limit_) throw ConfigError("enumeration block too large");
      solutions_.push_back(value_);
      return;
    }
    const std::size_t v = pick();
    assigned_[v] = true;
    for (Residue x = 0; x < m_.value(); ++x) {
      value_[v] = x;
      if (consistent()) descend(depth + 1);
    }
    assigned_[v] = false;
    value_[v] = 0;
  }

  Modulus m_;
  std::vector<LocalEquation> eqs_;
  std::size_t limit_;
  std::vector<Residue> value_;
  std::vector<bool> assigned_;
  std::vector<std::vector<Residue>> solutions_;
};

}  // namespace

EnumerationOracle::EnumerationOracle(const CoalitionView& view, Residue max_modulus,
                                     std::size_t max_free_unknowns)
    : modulus_(view.modulus), width_(view.layout.size()) {
  if (modulus_.value() > max_modulus) {
    throw ConfigError("enumeration oracle needs a modulus <= " + std::to_string(max_modulus));
  }
  std::size_t limit = 1;
  for (std::size_t i = 0; i < max_free_unknowns; ++i) limit *= modulus_.value();

  DisjointSets sets(width_);
  std::vector<const Equation*> local;
  for (const Equation& e : view.equations) {
    if (e.source == Equation::Source::kAnnouncedSum) {
      if (has_sum_) throw ConfigError("view has more than one announced-sum equation");
      has_sum_ = true;
      sum_form_ = e.coefficients;
      sum_value_ = e.constant;
      continue;
    }
    local.push_back(&e);
    std::size_t first = width_;
    for (std::size_t i = 0; i < width_; ++i) {
      if (e.coefficients[i] == 0) continue;
      if (first == width_) {
        first = i;
      } else {
        sets.unite(first, i);
      }
    }
  }

  std::vector<std::size_t> block_of(width_, SIZE_MAX);
  for (std::size_t i = 0; i < width_; ++i) {
    const std::size_t root = sets.find(i);
    if (block_of[root] == SIZE_MAX) {
      block_of[root] = blocks_.size();
      blocks_.push_back({});
    }
    blocks_[block_of[root]].unknowns.push_back(i);
  }

  for (Block& b : blocks_) {
    std::vector<std::size_t> local_index(width_, SIZE_MAX);
    for (std::size_t k = 0; k < b.unknowns.size(); ++k) local_index[b.unknowns[k]] = k;
    std::vector<LocalEquation> eqs;
    for (const Equation* e : local) {
      LocalEquation le{{}, e->constant};
      bool inside = false;
      for (std::size_t i = 0; i < width_; ++i) {
        if (e->coefficients[i] == 0) continue;
        if (local_index[i] == SIZE_MAX) break;
        inside = true;
        le.terms.emplace_back(local_index[i], e->coefficients[i]);
      }
      if (inside) eqs.push_back(std::move(le));
    }
    b.solutions = BlockEnumerator(b.unknowns.size(), std::move(eqs), modulus_, limit).run();
    if (b.solutions.empty()) throw ProtocolError("view has no consistent assignment");
  }
}

std::set<Residue> EnumerationOracle::values(const LinearForm& target) const {
  if (target.size() != width_) throw ConfigError("target has the wrong width");
  const Modulus& m = modulus_;
  std::set<std::pair<Residue, Residue>> reachable{{0, 0}};
  for (const Block& b : blocks_) {
    std::set<std::pair<Residue, Residue>> contribution;
    for (const auto& sol : b.solutions) {
      Residue f = 0;
      Residue s = 0;
      for (std::size_t k = 0; k < b.unknowns.size(); ++k) {
        const std::size_t slot = b.unknowns[k];
        f = mod_add(f, mod_mul(target[slot], sol[k], m), m);
        if (has_sum_) s = mod_add(s, mod_mul(sum_form_[slot], sol[k], m), m);
      }
      contribution.emplace(f, s);
    }
    std::set<std::pair<Residue, Residue>> next;
    for (auto [f0, s0] : reachable) {
      for (auto [f1, s1] : contribution) next.emplace(mod_add(f0, f1, m), mod_add(s0, s1, m));
    }
    reachable = std::move(next);
  }
  std::set<Residue> out;
  for (auto [f, s] : reachable) {
    if (!has_sum_ || s == sum_value_) out.insert(f);
  }
  if (out.empty()) throw ProtocolError("view has no consistent assignment");
  return out;
}

bool EnumerationOracle::determined(const LinearForm& target) const {
  return values(target).size() == 1;
}

}  // namespace ckss::verify
