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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "infodiagram/instance.hpp"
#include "infodiagram/shannon.hpp"

namespace infodiagram {

// A real function on all 2^n subsets of [n], indexed by mask.
class SetFunction {
 public:
  SetFunction(int n, std::vector<double> values);
  static SetFunction from(int n, const std::function<double(Mask)>& f);

  int generators() const { return n_; }
  double operator()(Mask subset) const { return values_[subset]; }
  std::span<const double> values() const { return values_; }

 private:
  int n_;
  std::vector<double> values_;
};

// R_1(A | B) = R(A u B) - R(B). Satisfies the chain rule identically.
ChainRuleInstance r1_instance(const SetFunction& r);

struct SubmodularityCheck {
  enum class Failure { none, normalization, monotonicity, submodularity };

  bool holds = true;
  Failure failure = Failure::none;
  // Violating pair: (0, 0) for normalization, a <= b for monotonicity.
  Mask a = 0;
  Mask b = 0;
};

// Normalization R(0) = 0, monotonicity and R(a) + R(b) >= R(a u b) + R(a n b),
// all within tol, checked exhaustively.
SubmodularityCheck is_submodular(const SetFunction& r, double tol = 1e-12);

// R(a u c) + R(b u c) - R(a u b u c) - R(c).
double conditional_mutual(const SetFunction& r, Mask a, Mask b, Mask c);

// Optimal generalization error for every feature subset.
using HypothesisEvaluator = SetFunction;

// Ad(A | B) = E(B) - E(A u B).
ChainRuleInstance advantage_instance(const HypothesisEvaluator& e);

// E(A) = H(target | X_A): the cross-entropy risk of the Bayes-optimal
// predictor that sees the features in A.
HypothesisEvaluator bayes_error_evaluator(const Dist& p, std::span<const RandomVariable> features,
                                          const RandomVariable& target,
                                          LogBase base = LogBase::nats);

}  // namespace infodiagram
