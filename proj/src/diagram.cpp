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

#include <algorithm>
#include <cstdint>
#include <memory>
#include <utility>

#include "infodiagram/errors.hpp"

namespace infodiagram {
namespace {

// Sign (-1)^(|K| + |I| + 1 - n).
inline double atom_sign(Mask k, int atom_size, int n) {
  return ((cardinality(k) + atom_size + 1 - n) & 1) ? -1.0 : 1.0;
}

template <class Total>
double mu_atom_impl(const Total& total, int n, AtomId atom) {
  const Mask inside = atom.subset();
  if ((inside & ~full_mask(n)) != 0) throw DomainError("atom outside [n]");
  const Mask outside = full_mask(n) & ~inside;
  const int size = atom.size();
  double sum = 0.0;
  // Submasks s of I in ascending order, so K = I^c u s ascends too.
  for (Mask s = 0;; s = (s - inside) & inside) {
    const Mask k = outside | s;
    if (k != 0) sum += atom_sign(k, size, n) * total(k);
    if (s == inside) break;
  }
  return sum;
}

}  // namespace

double mu_atom(const ChainRuleInstance& inst, AtomId atom) {
  return mu_atom_impl([&](Mask k) { return inst.total(MonoidElement(k)); }, inst.n, atom);
}

double mu_atom(std::span<const double> totals, int n, AtomId atom) {
  return mu_atom_impl([&](Mask k) { return totals[k]; }, n, atom);
}

std::vector<double> total_table(const ChainRuleInstance& inst) {
  check_generator_count(inst.n);
  const std::int64_t limit = std::int64_t{1} << inst.n;
  std::vector<double> totals(static_cast<std::size_t>(limit));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < limit; ++k) {
    totals[k] = inst.total(MonoidElement(static_cast<Mask>(k)));
  }
  return totals;
}

AtomTable mu_table(const ChainRuleInstance& inst) {
  const std::vector<double> totals = total_table(inst);
  const std::int64_t limit = std::int64_t{1} << inst.n;
  AtomTable table{inst.n, std::vector<double>(static_cast<std::size_t>(limit), 0.0)};
  // Cost of atom I is 2^|I|; dynamic scheduling evens that out.
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t atom = 1; atom < limit; ++atom) {
    table.values[atom] = mu_atom(totals, inst.n, AtomId(static_cast<Mask>(atom)));
  }
  return table;
}

double mu_region(const ChainRuleInstance& inst, const RegionMask& region) {
  double sum = 0.0;
  for (Mask atom : region.members()) sum += mu_atom(inst, AtomId(atom));
  return sum;
}

double mu_region(const AtomTable& table, const RegionMask& region) {
  double sum = 0.0;
  for (Mask atom : region.members()) sum += table[atom];
  return sum;
}

std::size_t InteractionEvaluator::KeyHash::operator()(const Key& key) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ key.condition;
  for (Mask m : key.terms) {
    h ^= m + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

double InteractionEvaluator::operator()(std::span<const MonoidElement> terms,
                                        MonoidElement condition) {
  if (terms.empty()) throw DomainError("interaction requires q >= 1");
  std::vector<Mask> sorted(terms.size());
  std::transform(terms.begin(), terms.end(), sorted.begin(),
                 [](MonoidElement e) { return e.bits; });
  std::sort(sorted.begin(), sorted.end());
  return evaluate_sorted(sorted, condition.bits);
}

double InteractionEvaluator::evaluate_sorted(std::span<const Mask> terms, Mask condition) {
  if (terms.size() == 1) {
    return inst_->k1(MonoidElement(terms[0]), MonoidElement(condition));
  }
  Key key{std::vector<Mask>(terms.begin(), terms.end()), condition};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const auto prefix = terms.first(terms.size() - 1);
  const double value =
      evaluate_sorted(prefix, condition) - evaluate_sorted(prefix, condition | terms.back());
  cache_.emplace(std::move(key), value);
  return value;
}

double interaction(const ChainRuleInstance& inst, std::span<const MonoidElement> terms,
                   MonoidElement condition) {
  InteractionEvaluator eval(inst);
  return eval(terms, condition);
}

double interaction_incl_excl(const ChainRuleInstance& inst,
                             std::span<const MonoidElement> terms, MonoidElement condition) {
  if (terms.empty()) throw DomainError("interaction requires q >= 1");
  if (terms.size() > 20) throw DomainError("interaction_incl_excl supports q <= 20");
  const std::uint32_t subsets = std::uint32_t{1} << terms.size();
  double sum = 0.0;
  for (std::uint32_t chosen = 0; chosen < subsets; ++chosen) {
    MonoidElement joint = condition;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if ((chosen >> k) & 1u) joint = joint * terms[k];
    }
    const double sign = (cardinality(chosen) & 1) ? 1.0 : -1.0;
    sum += sign * inst.total(joint);
  }
  return sum;
}

double eta(const ChainRuleInstance& inst, AtomId atom) {
  std::vector<MonoidElement> singles;
  for (int i = 0; i < inst.n; ++i) {
    if ((atom.subset() >> i) & 1u) singles.push_back(MonoidElement::generator(i));
  }
  return interaction(inst, singles, MonoidElement(full_mask(inst.n) & ~atom.subset()));
}

ChainRuleInstance relative_instance(const ChainRuleInstance& inst,
                                    std::vector<MonoidElement> fixed_terms,
                                    MonoidElement fixed_condition) {
  auto base = std::make_shared<const ChainRuleInstance>(inst);
  auto k1 = [base, fixed_terms = std::move(fixed_terms), fixed_condition](MonoidElement v,
                                                                        MonoidElement w) {
    std::vector<MonoidElement> terms = fixed_terms;
    terms.push_back(v);
    return interaction(*base, terms, w * fixed_condition);
  };
  return make_instance(inst.n, k1, inst.kind + "/relative");
}

}  // namespace infodiagram
