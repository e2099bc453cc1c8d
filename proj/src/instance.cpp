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

#include "infodiagram/instance.hpp"

#include <cmath>
#include <cstddef>
#include <memory>
#include <sstream>
#include <utility>

#include "infodiagram/errors.hpp"

namespace infodiagram {

ChainRuleInstance make_instance(int n, ConditionalEvaluator k1, std::string kind) {
  check_generator_count(n);
  if (!k1) throw DomainError("instance has no evaluator");
  return ChainRuleInstance{n, std::move(k1), std::move(kind)};
}

ChainRuleInstance tabulate(const ChainRuleInstance& inst) {
  if (inst.n > 8) throw DomainError("tabulate supports n <= 8");
  const int n = inst.n;
  const std::int64_t side = std::int64_t{1} << n;
  auto table = std::make_shared<std::vector<double>>(static_cast<std::size_t>(side * side));
#pragma omp parallel for schedule(static)
  for (std::int64_t code = 0; code < side * side; ++code) {
    const auto y = static_cast<Mask>(code % side);
    const auto z = static_cast<Mask>(code / side);
    (*table)[code] = inst.k1(MonoidElement(y), MonoidElement(z));
  }
  auto k1 = [table, n](MonoidElement y, MonoidElement z) {
    return (*table)[y.bits | (static_cast<std::size_t>(z.bits) << n)];
  };
  return ChainRuleInstance{n, k1, inst.kind};
}

std::vector<ChainRuleViolation> chain_rule_violations(const ChainRuleInstance& inst,
                                                      double tol) {
  std::vector<ChainRuleViolation> out;
  const Mask limit = Mask{1} << inst.n;
  std::vector<double> totals(limit);
  for (Mask m = 0; m < limit; ++m) totals[m] = inst.total(MonoidElement(m));
  for (Mask y = 0; y < limit; ++y) {
    for (Mask z = 0; z < limit; ++z) {
      const double joint = totals[y | z];
      const double decomposed = totals[y] + inst.k1(MonoidElement(z), MonoidElement(y));
      const double residual = std::abs(joint - decomposed);
      if (!(residual <= tol)) {
        out.push_back({MonoidElement(y), MonoidElement(z), joint, decomposed, residual});
      }
    }
  }
  return out;
}

void require_chain_rule(const ChainRuleInstance& inst, double tol) {
  auto violations = chain_rule_violations(inst, tol);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "chain rule violated for " << violations.size() << " pair(s) (tol " << tol << "):";
  const std::size_t shown = std::min<std::size_t>(violations.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& v = violations[i];
    msg << " (Y=" << format_subset(v.y.bits) << ", Z=" << format_subset(v.z.bits)
        << ", residual " << v.residual << ")";
  }
  if (shown < violations.size()) msg << " ...";
  throw VerificationError(msg.str());
}

}  // namespace infodiagram
