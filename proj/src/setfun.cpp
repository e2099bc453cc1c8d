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

#include "infodiagram/setfun.hpp"

#include <cmath>
#include <memory>

#include "infodiagram/errors.hpp"

namespace infodiagram {

SetFunction::SetFunction(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  check_generator_count(n);
  if (values_.size() != (std::size_t{1} << n)) {
    throw DomainError("set function on " + std::to_string(n) + " generators needs " +
                      std::to_string(std::size_t{1} << n) + " values, got " +
                      std::to_string(values_.size()));
  }
}

SetFunction SetFunction::from(int n, const std::function<double(Mask)>& f) {
  check_generator_count(n);
  std::vector<double> values(std::size_t{1} << n);
  for (Mask m = 0; m < values.size(); ++m) values[m] = f(m);
  return SetFunction(n, std::move(values));
}

ChainRuleInstance r1_instance(const SetFunction& r) {
  auto table = std::make_shared<const SetFunction>(r);
  auto k1 = [table](MonoidElement a, MonoidElement b) {
    return (*table)(a.bits | b.bits) - (*table)(b.bits);
  };
  return make_instance(r.generators(), k1, "setfun");
}

SubmodularityCheck is_submodular(const SetFunction& r, double tol) {
  using Failure = SubmodularityCheck::Failure;
  const Mask limit = Mask{1} << r.generators();
  if (!(std::abs(r(0)) <= tol)) return {false, Failure::normalization, 0, 0};
  // Monotonicity reduces to single-element extensions.
  for (Mask a = 0; a < limit; ++a) {
    for (int i = 0; i < r.generators(); ++i) {
      const Mask b = a | (Mask{1} << i);
      if (b != a && r(a) > r(b) + tol) return {false, Failure::monotonicity, a, b};
    }
  }
  for (Mask a = 0; a < limit; ++a) {
    for (Mask b = 0; b < limit; ++b) {
      if (r(a) + r(b) + tol < r(a | b) + r(a & b)) return {false, Failure::submodularity, a, b};
    }
  }
  return {};
}

double conditional_mutual(const SetFunction& r, Mask a, Mask b, Mask c) {
  return r(a | c) + r(b | c) - r(a | b | c) - r(c);
}

ChainRuleInstance advantage_instance(const HypothesisEvaluator& e) {
  auto table = std::make_shared<const SetFunction>(e);
  auto k1 = [table](MonoidElement a, MonoidElement b) {
    return (*table)(b.bits) - (*table)(a.bits | b.bits);
  };
  return make_instance(e.generators(), k1, "advantage");
}

HypothesisEvaluator bayes_error_evaluator(const Dist& p, std::span<const RandomVariable> features,
                                          const RandomVariable& target, LogBase base) {
  const int n = static_cast<int>(features.size());
  check_generator_count(n);
  std::vector<RandomVariable> all(features.begin(), features.end());
  all.push_back(target);
  // The target is generator n, so every feature subset joins it with one extra bit.
  const JointPartitions parts(all, p.size());
  const Mask target_bit = Mask{1} << n;
  auto h = [&](Mask m) {
    std::vector<double> masses(parts.value_count(m), 0.0);
    const auto& labels = parts.labels(m);
    for (std::size_t i = 0; i < p.size(); ++i) masses[labels[i]] += p[i];
    double sum = 0.0;
    for (double x : masses) {
      if (x > 0.0) sum -= x * std::log(x);
    }
    return sum * log_scale(base);
  };
  return SetFunction::from(n, [&](Mask a) { return h(a | target_bit) - h(a); });
}

}  // namespace infodiagram
