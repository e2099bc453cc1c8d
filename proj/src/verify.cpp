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

#include "infodiagram/verify.hpp"

#include <cmath>
#include <cstdint>
#include <memory>
#include <random>

#include "infodiagram/errors.hpp"

namespace infodiagram {
namespace {

// Largest n for which all 4^n values of k1 are precomputed before the sweep.
constexpr int kMaxTabulated = 8;

struct CaseList {
  std::vector<int> q;
  std::vector<Mask> terms;  // q_max slots per case
  std::vector<Mask> excluded;
  int stride = 0;

  std::size_t size() const { return q.size(); }
};

CaseList exhaustive_cases(int n, int q_max) {
  CaseList cases;
  cases.stride = q_max;
  const std::uint64_t side = std::uint64_t{1} << n;
  for (int q = 1; q <= q_max; ++q) {
    const std::uint64_t tuples = std::uint64_t{1} << (n * q);
    for (std::uint64_t code = 0; code < tuples; ++code) {
      for (Mask j = 0; j < side; ++j) {
        cases.q.push_back(q);
        std::uint64_t rest = code;
        for (int k = 0; k < q_max; ++k) {
          cases.terms.push_back(k < q ? static_cast<Mask>(rest % side) : 0);
          rest /= side;
        }
        cases.excluded.push_back(j);
      }
    }
  }
  return cases;
}

CaseList sampled_cases(int n, int q_max, std::size_t samples, std::uint64_t seed) {
  CaseList cases;
  cases.stride = q_max;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_q(1, q_max);
  std::uniform_int_distribution<Mask> pick_mask(0, full_mask(n));
  for (std::size_t i = 0; i < samples; ++i) {
    const int q = pick_q(rng);
    cases.q.push_back(q);
    for (int k = 0; k < q_max; ++k) cases.terms.push_back(k < q ? pick_mask(rng) : 0);
    cases.excluded.push_back(pick_mask(rng));
  }
  return cases;
}

ChainRuleInstance tabulate_serial(const ChainRuleInstance& inst) {
  const int n = inst.n;
  const Mask side = Mask{1} << n;
  auto table = std::make_shared<std::vector<double>>(std::size_t{side} * side);
  for (Mask z = 0; z < side; ++z) {
    for (Mask y = 0; y < side; ++y) {
      (*table)[y | (std::size_t{z} << n)] = inst.k1(MonoidElement(y), MonoidElement(z));
    }
  }
  auto k1 = [table, n](MonoidElement y, MonoidElement z) {
    return (*table)[y.bits | (static_cast<std::size_t>(z.bits) << n)];
  };
  return ChainRuleInstance{n, k1, inst.kind};
}

void evaluate_case(InteractionEvaluator& eval, const AtomTable& atoms, const CaseList& cases,
                   std::size_t i, int n, std::vector<MonoidElement>& scratch, double& lhs,
                   double& rhs) {
  const int q = cases.q[i];
  scratch.resize(q);
  for (int k = 0; k < q; ++k) scratch[k] = MonoidElement(cases.terms[i * cases.stride + k]);
  const MonoidElement excluded(cases.excluded[i]);
  lhs = eval(scratch, excluded);
  rhs = mu_region(atoms, hu_region(scratch, excluded, n));
}

DiagramReport run(const ChainRuleInstance& inst, const VerifyOptions& options, bool parallel) {
  check_generator_count(inst.n);
  if (options.q_max < 1) throw DomainError("q_max must be >= 1");
  if (!(options.tol >= 0)) throw DomainError("tolerance must be nonnegative");
  const int n = inst.n;
  const bool exhaustive = n <= kMaxExhaustiveGenerators;

  const ChainRuleInstance work =
      n <= kMaxTabulated ? (parallel ? tabulate(inst) : tabulate_serial(inst)) : inst;
  if (options.check_chain_rule) require_chain_rule(work, options.tol);

  DiagramReport report;
  report.tolerance = options.tol;
  report.exhaustive = exhaustive;
  report.atom_values = parallel ? mu_table(work) : serial::mu_table(work);

  const CaseList cases = exhaustive
                             ? exhaustive_cases(n, options.q_max)
                             : sampled_cases(n, options.q_max, options.samples, options.seed);
  const std::int64_t count = static_cast<std::int64_t>(cases.size());
  std::vector<double> lhs(cases.size());
  std::vector<double> rhs(cases.size());

  if (parallel) {
#pragma omp parallel
    {
      InteractionEvaluator eval(work);
      std::vector<MonoidElement> scratch;
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < count; ++i) {
        evaluate_case(eval, report.atom_values, cases, i, n, scratch, lhs[i], rhs[i]);
      }
    }
  } else {
    InteractionEvaluator eval(work);
    std::vector<MonoidElement> scratch;
    for (std::int64_t i = 0; i < count; ++i) {
      evaluate_case(eval, report.atom_values, cases, i, n, scratch, lhs[i], rhs[i]);
    }
  }

  report.cases_checked = cases.size();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    double residual = std::abs(lhs[i] - rhs[i]);
    if (std::isnan(residual)) residual = INFINITY;
    if (residual > report.max_residual) report.max_residual = residual;
    if (!options.keep_all_rows && residual <= options.tol) continue;
    ResidualRow row;
    row.q = cases.q[i];
    for (int k = 0; k < row.q; ++k) {
      row.intersected.emplace_back(cases.terms[i * cases.stride + k]);
    }
    row.excluded = MonoidElement(cases.excluded[i]);
    row.lhs = lhs[i];
    row.rhs = rhs[i];
    row.residual = residual;
    report.residuals.push_back(std::move(row));
  }
  return report;
}

}  // namespace

DiagramReport verify_hu(const ChainRuleInstance& inst, const VerifyOptions& options) {
  return run(inst, options, /*parallel=*/true);
}

DiagramReport verify_hu(const ChainRuleInstance& inst, int q_max, double tol) {
  VerifyOptions options;
  options.q_max = q_max;
  options.tol = tol;
  return verify_hu(inst, options);
}

namespace serial {
DiagramReport verify_hu(const ChainRuleInstance& inst, const VerifyOptions& options) {
  return run(inst, options, /*parallel=*/false);
}
}  // namespace serial

}  // namespace infodiagram
