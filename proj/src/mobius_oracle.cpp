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

#include <Eigen/Dense>

#include <sstream>

#include "infodiagram/diagram.hpp"
#include "infodiagram/errors.hpp"

namespace infodiagram {

AtomTable mobius_oracle(const ChainRuleInstance& inst) {
  const int n = inst.n;
  check_generator_count(n);
  if (n > kMaxExhaustiveGenerators) {
    throw DomainError("mobius_oracle supports n <= " + std::to_string(kMaxExhaustiveGenerators));
  }
  const int size = static_cast<int>(full_mask(n));
  // Row K-1: circle of K; column I-1: atom p_I.
  Eigen::MatrixXd incidence(size, size);
  Eigen::VectorXd totals(size);
  for (int k = 1; k <= size; ++k) {
    for (int i = 1; i <= size; ++i) incidence(k - 1, i - 1) = (k & i) != 0 ? 1.0 : 0.0;
    totals(k - 1) = inst.total(MonoidElement(static_cast<Mask>(k)));
  }
  const Eigen::VectorXd solution = incidence.fullPivLu().solve(totals);
  const double residual = (incidence * solution - totals).lpNorm<Eigen::Infinity>();
  const double scale = std::max(1.0, totals.lpNorm<Eigen::Infinity>());
  if (!(residual <= 1e-9 * scale)) {
    std::ostringstream msg;
    msg << "mobius_oracle: linear solve residual " << residual << " exceeds tolerance";
    throw std::logic_error(msg.str());
  }
  AtomTable table{n, std::vector<double>(std::size_t{1} << n, 0.0)};
  for (int i = 1; i <= size; ++i) table.values[i] = solution(i - 1);
  return table;
}

}  // namespace infodiagram
