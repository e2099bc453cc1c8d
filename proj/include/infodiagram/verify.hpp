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
#include <cstdint>
#include <vector>

#include "infodiagram/diagram.hpp"
#include "infodiagram/instance.hpp"

namespace infodiagram {

struct ResidualRow {
  int q = 0;
  std::vector<MonoidElement> intersected;  // L_1..L_q
  MonoidElement excluded;                  // J
  double lhs = 0;                          // K_q(L_1; ...; L_q | J)
  double rhs = 0;                          // mu of the Hu region
  double residual = 0;
};

struct DiagramReport {
  AtomTable atom_values;
  std::vector<ResidualRow> residuals;
  double max_residual = 0;
  std::size_t cases_checked = 0;
  double tolerance = 0;
  bool exhaustive = true;

  bool passed() const { return max_residual <= tolerance; }
};

struct VerifyOptions {
  int q_max = 3;
  double tol = 1e-9;
  // Throw VerificationError before comparing if k1 violates the chain rule.
  bool check_chain_rule = true;
  // When false only rows with residual > tol are kept.
  bool keep_all_rows = true;
  // Sampled mode (n > kMaxExhaustiveGenerators).
  std::uint64_t seed = 0;
  std::size_t samples = 20000;
};

// Compares K_q(L_1; ...; L_q | J) against mu(hu_region(L, J)) for every
// q <= q_max and every tuple of subsets (L_1..L_q, J) when n is small enough,
// or for a seeded random sample otherwise. Rows come out in enumeration order.
DiagramReport verify_hu(const ChainRuleInstance& inst, const VerifyOptions& options = {});
DiagramReport verify_hu(const ChainRuleInstance& inst, int q_max, double tol);

namespace serial {
DiagramReport verify_hu(const ChainRuleInstance& inst, const VerifyOptions& options = {});
}  // namespace serial

}  // namespace infodiagram
