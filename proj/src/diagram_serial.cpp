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

#include "infodiagram/diagram.hpp"

namespace infodiagram::serial {

std::vector<double> total_table(const ChainRuleInstance& inst) {
  check_generator_count(inst.n);
  const Mask limit = Mask{1} << inst.n;
  std::vector<double> totals(limit);
  for (Mask k = 0; k < limit; ++k) totals[k] = inst.total(MonoidElement(k));
  return totals;
}

AtomTable mu_table(const ChainRuleInstance& inst) {
  const std::vector<double> totals = serial::total_table(inst);
  const Mask limit = Mask{1} << inst.n;
  AtomTable table{inst.n, std::vector<double>(limit, 0.0)};
  for (Mask atom = 1; atom < limit; ++atom) {
    table.values[atom] = mu_atom(totals, inst.n, AtomId(atom));
  }
  return table;
}

}  // namespace infodiagram::serial
