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

#include <functional>
#include <string>
#include <vector>

#include "infodiagram/monoid.hpp"

namespace infodiagram {

// k1(Y | Z) for monoid elements Y, Z.
using ConditionalEvaluator = std::function<double(MonoidElement, MonoidElement)>;

// A two-argument function over the monoid on n generators that is expected
// to satisfy k1(Y Z) = k1(Y) + k1(Z | Y), with k1(Y) := k1(Y | 1). This is
// the single interface the diagram engine consumes; every concrete measure
// (entropy, divergences, set functions) is adapted to it.
//
// Evaluators must be safe to call concurrently.
struct ChainRuleInstance {
  int n = 0;
  ConditionalEvaluator k1;
  std::string kind;

  double conditional(MonoidElement y, MonoidElement z) const { return k1(y, z); }
  // F_1(Y) = k1(Y | 1).
  double total(MonoidElement y) const { return k1(y, MonoidElement{}); }
};

// Validates n against the generator cap.
ChainRuleInstance make_instance(int n, ConditionalEvaluator k1, std::string kind);

// Same values, precomputed for all 4^n argument pairs. n <= 8.
ChainRuleInstance tabulate(const ChainRuleInstance& inst);

struct ChainRuleViolation {
  MonoidElement y;
  MonoidElement z;
  double joint;        // k1(Y Z)
  double decomposed;   // k1(Y) + k1(Z | Y)
  double residual;
};

// Every pair (Y, Z) whose chain-rule residual exceeds tol, ordered by (Y, Z).
std::vector<ChainRuleViolation> chain_rule_violations(const ChainRuleInstance& inst,
                                                      double tol);

// Throws VerificationError naming up to the first few violating pairs.
void require_chain_rule(const ChainRuleInstance& inst, double tol);

}  // namespace infodiagram
