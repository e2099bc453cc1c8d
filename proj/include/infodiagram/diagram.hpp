// Copyright 2026 The Infodiagram Authors.
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

#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "infodiagram/instance.hpp"
#include "infodiagram/monoid.hpp"
#include "infodiagram/region.hpp"

namespace infodiagram {

// Atom values mu(p_I) indexed by the atom's mask. Slot 0 is unused and 0.
struct AtomTable {
  int n = 0;
  std::vector<double> values;

  double operator[](Mask atom) const { return values[atom]; }
  double at(AtomId atom) const { return values[atom.subset()]; }
};

// mu(p_I) = sum over nonempty K with I^c <= K <= [n] of
// (-1)^(|K| + |I| + 1 - n) F_1(X_K). O(2^|I|) evaluations of k1.
double mu_atom(const ChainRuleInstance& inst, AtomId atom);

// Same formula against a precomputed table of F_1(X_K), K in [0, 2^n).
double mu_atom(std::span<const double> totals, int n, AtomId atom);

// F_1(X_K) for every K, evaluated in parallel.
std::vector<double> total_table(const ChainRuleInstance& inst);

// mu(p_I) for every atom, evaluated in parallel. Each atom's value is
// accumulated in a fixed order, so the table does not depend on scheduling.
AtomTable mu_table(const ChainRuleInstance& inst);

// Sum of atom values over a region in ascending atom order; 0 for the empty region.
double mu_region(const ChainRuleInstance& inst, const RegionMask& region);
double mu_region(const AtomTable& table, const RegionMask& region);

// Memoized evaluator of the conditional interaction terms
//   K_q(Y_1; ...; Y_q | Z) = K_{q-1}(Y_1..Y_{q-1} | Z) - K_{q-1}(Y_1..Y_{q-1} | Y_q Z)
// with K_1 = k1. Not thread-safe; use one per thread.
class InteractionEvaluator {
 public:
  explicit InteractionEvaluator(const ChainRuleInstance& inst) : inst_(&inst) {}

  double operator()(std::span<const MonoidElement> terms, MonoidElement condition);

  std::size_t cache_size() const { return cache_.size(); }

 private:
  struct Key {
    std::vector<Mask> terms;
    Mask condition;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const;
  };

  double evaluate_sorted(std::span<const Mask> terms, Mask condition);

  const ChainRuleInstance* inst_;
  std::unordered_map<Key, double, KeyHash> cache_;
};

// K_q(L_1; ...; L_q | J). Throws DomainError when q = 0.
double interaction(const ChainRuleInstance& inst, std::span<const MonoidElement> terms,
                   MonoidElement condition);

// Non-recursive form: sum over K <= [q] of (-1)^(|K|+1) F_1(Y_K Z).
double interaction_incl_excl(const ChainRuleInstance& inst,
                             std::span<const MonoidElement> terms, MonoidElement condition);

// eta_I: the interaction of the singletons in I conditioned on everything
// outside I. Equals mu_atom(I) for a valid instance.
double eta(const ChainRuleInstance& inst, AtomId atom);

// Largest n accepted by mobius_oracle and exhaustive verification.
inline constexpr int kMaxExhaustiveGenerators = 5;

// Recovers the atom values by solving sum_{I meets K} a_I = F_1(X_K) for all
// nonempty K as a dense linear system. Independent of the closed form.
AtomTable mobius_oracle(const ChainRuleInstance& inst);

// The instance relative to fixed Y_1..Y_p and Z:
//   k~1(V | W) = K_{p+1}(Y_1; ...; Y_p; V | W Z).
// With p = 0 and Z = 1 it reproduces the original values.
ChainRuleInstance relative_instance(const ChainRuleInstance& inst,
                                    std::vector<MonoidElement> fixed_terms,
                                    MonoidElement fixed_condition);

// Single-threaded reference kernels, kept to cross-check the parallel ones.
namespace serial {
std::vector<double> total_table(const ChainRuleInstance& inst);
AtomTable mu_table(const ChainRuleInstance& inst);
}  // namespace serial

}  // namespace infodiagram
