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

// Acceptance gate: one [PASS]/[FAIL] line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "infodiagram/diagram.hpp"
#include "infodiagram/divergences.hpp"
#include "infodiagram/region.hpp"
#include "infodiagram/setfun.hpp"
#include "infodiagram/shannon.hpp"
#include "infodiagram/verify.hpp"
#include "support/random_contexts.hpp"

namespace {

using namespace infodiagram;
using E = MonoidElement;
namespace t = infodiagram::testing;

struct Outcome {
  bool passed;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double time_limit_s,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < time_limit_s;
  const bool ok = o.passed && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %2d %-40s %s; %.3f s (limit %.0f s)%s\n", ok ? "PASS" : "FAIL", id,
              name.c_str(), o.detail.c_str(), secs, time_limit_s, in_time ? "" : " TIMEOUT");
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

EmpiricalData xor_data() {
  return empirical_from_rows({{"0", "0", "0"}, {"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}});
}

std::vector<E> singletons(Mask m) {
  std::vector<E> out;
  for (int i = 0; i < 32; ++i) {
    if (m >> i & 1) out.push_back(E::generator(i));
  }
  return out;
}

Outcome xor_interaction() {
  const EmpiricalData d = xor_data();
  const auto inst = shannon_instance(d.dist, d.variables, LogBase::bits);
  const double v = interaction(inst, singletons(0b111), E{});
  return {std::abs(v + 1.0) <= 1e-9, "I_3 = " + fmt("%.12g", v) + " bits (expected -1)"};
}

Outcome bsc_divergence() {
  bool ok = true;
  std::string detail;
  for (double eps : {0.5, 0.25, 0.01}) {
    const auto b = binary_symmetric_channels(eps);
    const auto inst = kl_instance(b.pq, b.generators, LogBase::bits);
    const double v = interaction(inst, singletons(0b11), E{});
    const double closed = 0.0 - (-1.0 - 0.5 * (std::log2(1 - eps) + std::log2(eps)));
    ok = ok && std::abs(v - closed) <= 1e-9;
    if (eps == 0.5) ok = ok && std::abs(v) <= 1e-9;
    if (eps == 0.25) ok = ok && std::abs(v + 0.2075187496) <= 1e-9;
    if (eps == 0.01) ok = ok && v < -1.0;
    detail += fmt("eps=%g: ", eps) + fmt("%.10f ", v);
  }
  return {ok, "D_2 " + detail};
}

Outcome advantage_synergy() {
  const EmpiricalData d = xor_data();
  const std::vector<RandomVariable> features{d.variables[0], d.variables[1]};
  const auto e = bayes_error_evaluator(d.dist, features, d.variables[2], LogBase::bits);
  const double expected[] = {1, 1, 1, 0};
  bool ok = true;
  for (Mask a = 0; a < 4; ++a) ok = ok && std::abs(e(a) - expected[a]) <= 1e-12;
  const double ad = interaction(advantage_instance(e), singletons(0b11), E{});
  ok = ok && std::abs(ad + 1.0) <= 1e-12;
  return {ok, fmt("E = (%g,", e(0)) + fmt("%g,", e(1)) + fmt("%g,", e(2)) + fmt("%g)", e(3)) +
                  fmt(", Ad^2 = %.12g", ad)};
}

Outcome hu_sweep() {
  std::mt19937_64 rng(2024);
  double worst_measure = 0;
  double worst_exact = 0;
  std::size_t cases = 0;
  const char* names[] = {"shannon", "tsallis2", "tsallis0.5", "kl", "alpha-kl2", "cross-entropy"};
  std::string detail;
  for (int kind = 0; kind < 6; ++kind) {
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto ctx = t::random_pair_context(3, rng);
      ChainRuleInstance inst;
      switch (kind) {
        case 0: inst = shannon_instance(ctx.pq.p(), ctx.generators); break;
        case 1: inst = tsallis_instance(ctx.pq.p(), ctx.generators, Alpha(2)); break;
        case 2: inst = tsallis_instance(ctx.pq.p(), ctx.generators, Alpha(0.5)); break;
        case 3: inst = kl_instance(ctx.pq, ctx.generators); break;
        case 4: inst = alpha_kl_instance(ctx.pq, ctx.generators, Alpha(2)); break;
        default: inst = cross_entropy_instance(ctx.pq, ctx.generators); break;
      }
      VerifyOptions o;
      o.q_max = 3;
      o.tol = 1e-9;
      o.keep_all_rows = false;
      const DiagramReport r = verify_hu(inst, o);
      if (!r.exhaustive) return {false, "verification was not exhaustive"};
      worst = std::max(worst, r.max_residual);
      cases += r.cases_checked;
    }
    worst_measure = std::max(worst_measure, worst);
    detail += std::string(names[kind]) + fmt(" %.1e, ", worst);
  }
  for (int trial = 0; trial < 100; ++trial) {
    VerifyOptions o;
    o.q_max = 3;
    o.tol = 1e-12;
    o.keep_all_rows = false;
    const auto r1 = verify_hu(r1_instance(t::random_setfunction(4, rng)), o);
    const auto ad = verify_hu(advantage_instance(t::random_setfunction(4, rng)), o);
    worst_exact = std::max({worst_exact, r1.max_residual, ad.max_residual});
    cases += r1.cases_checked + ad.cases_checked;
  }
  detail += fmt("setfun/advantage n=4 %.1e", worst_exact);
  return {worst_measure <= 1e-9 && worst_exact <= 1e-12,
          detail + "; " + std::to_string(cases) + " cases"};
}

Outcome mobius_equivalence() {
  std::mt19937_64 rng(55);
  double gap = 0;
  int instances = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto ctx = t::random_shannon_context(n, rng);
      const auto inst = shannon_instance(ctx.p, ctx.generators);
      const AtomTable closed = mu_table(inst);
      const AtomTable solved = mobius_oracle(inst);
      for (Mask i = 1; i < (Mask{1} << n); ++i) gap = std::max(gap, std::abs(closed[i] - solved[i]));
      ++instances;
    }
  }
  return {gap <= 1e-9, fmt("max gap %.2e over ", gap) + std::to_string(instances) + " instances"};
}

Outcome corollary_identities() {
  std::mt19937_64 rng(66);
  constexpr int n = 3;
  constexpr Mask limit = 1u << n;
  double worst[7] = {0, 0, 0, 0, 0, 0, 0};
  auto sign = [](int k) { return k % 2 == 0 ? 1.0 : -1.0; };
  for (int trial = 0; trial < 20; ++trial) {
    const auto ctx = t::random_shannon_context(n, rng);
    const auto inst = shannon_instance(ctx.p, ctx.generators);
    // eta via the fully conditioned interaction; F_q via the recursion.
    std::vector<double> eta_v(limit, 0.0), fq(limit, 0.0), f1(limit, 0.0);
    for (Mask m = 1; m < limit; ++m) {
      eta_v[m] = eta(inst, AtomId(m));
      fq[m] = interaction(inst, singletons(m), E{});
      f1[m] = inst.total(E(m));
    }
    const AtomTable closed = mu_table(inst);
    auto bump = [&](int k, double a, double b) { worst[k] = std::max(worst[k], std::abs(a - b)); };
    for (Mask i = 1; i < limit; ++i) {
      bump(1, closed[i], eta_v[i]);
      double s3 = 0, s4 = 0;
      for (Mask j = i; j < limit; ++j) {
        if ((j & i) != i) continue;
        s3 += eta_v[j];
        s4 += sign(cardinality(j) - cardinality(i)) * fq[j];
      }
      bump(3, fq[i], s3);
      bump(4, eta_v[i], s4);
      double s6 = 0;
      for (Mask k = i;; k = (k - 1) & i) {
        if (k == 0) break;
        s6 += sign(cardinality(k) + 1) * f1[k];
      }
      bump(6, fq[i], s6);
    }
    for (Mask k = 0; k < limit; ++k) {
      double s2 = 0, s5 = 0;
      for (Mask i = 1; i < limit; ++i) {
        if (i & k) s2 += eta_v[i];
        if (i != 0 && (i & k) == i) s5 += sign(cardinality(i) + 1) * fq[i];
      }
      bump(2, f1[k], s2);
      bump(5, f1[k], s5);
    }
  }
  bool ok = true;
  std::string detail;
  const char* labels[] = {"", "closed-form eta", "circle sum", "interaction as atom sum",
                          "eta by inversion", "total by interactions", "interaction by totals"};
  for (int k = 1; k <= 6; ++k) {
    ok = ok && worst[k] <= 1e-9;
    detail += std::string(k > 1 ? ", " : "") + labels[k] + fmt(" %.1e", worst[k]);
  }
  return {ok, detail};
}

Outcome relative_computation() {
  std::mt19937_64 rng(77);
  constexpr Mask limit = 16;
  double worst = 0;
  std::size_t checks = 0;
  std::uniform_int_distribution<Mask> pick(0, limit - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ctx = t::random_shannon_context(4, rng);
    const auto inst = tabulate(shannon_instance(ctx.p, ctx.generators));
    for (int draw = 0; draw < 4; ++draw) {
      const E y(pick(rng));
      const E z(pick(rng));
      const auto rel = relative_instance(inst, {y}, z);
      InteractionEvaluator rel_eval(rel);
      for (Mask v1 = 0; v1 < limit; ++v1) {
        const std::vector<E> lhs1{E(v1)};
        const std::vector<E> rhs1{y, E(v1)};
        worst = std::max(worst, std::abs(rel_eval(lhs1, E{}) - interaction_incl_excl(inst, rhs1, z)));
        ++checks;
        for (Mask v2 = 0; v2 < limit; ++v2) {
          const std::vector<E> lhs2{E(v1), E(v2)};
          const std::vector<E> rhs2{y, E(v1), E(v2)};
          worst = std::max(worst,
                           std::abs(rel_eval(lhs2, E{}) - interaction_incl_excl(inst, rhs2, z)));
          ++checks;
        }
      }
    }
  }
  return {worst <= 1e-9, fmt("max gap %.2e over ", worst) + std::to_string(checks) + " checks"};
}

Outcome split_identity() {
  std::mt19937_64 rng(88);
  double worst = 0;
  const std::vector<E> lhs_terms{E(0b011), E(0b101)};
  const std::vector<E> cond_terms{E(0b001)};
  const std::vector<E> rest_terms{E(0b011), E(0b100)};
  const bool regions = hu_region(lhs_terms, E{}, 3) ==
                           (hu_region(cond_terms, E(0b100), 3) | hu_region(rest_terms, E{}, 3)) &&
                       (hu_region(cond_terms, E(0b100), 3) & hu_region(rest_terms, E{}, 3)).empty();
  for (int trial = 0; trial < 20; ++trial) {
    const auto ctx = t::random_shannon_context(3, rng);
    const auto inst = shannon_instance(ctx.p, ctx.generators);
    const double lhs = interaction(inst, lhs_terms, E{});
    const double rhs = interaction(inst, cond_terms, E(0b100)) + interaction(inst, rest_terms, E{});
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return {regions && worst <= 1e-9,
          fmt("max gap %.2e", worst) + (regions ? ", regions coincide" : ", REGIONS DIFFER")};
}

Outcome equivalence_theory() {
  std::mt19937_64 rng(99);
  const auto parts = t::all_partitions(4);
  if (parts.size() != 15) return {false, "expected 15 partitions, got " + std::to_string(parts.size())};
  const Dist p = t::random_dist(4, rng);
  int failures_here = 0;
  int pairs = 0;
  for (const auto& x : parts) {
    for (const auto& y : parts) {
      ++pairs;
      const bool same_partition = std::equal(x.labels().begin(), x.labels().end(), y.labels().begin());
      const bool act_zero = std::abs(act(x, entropy_function(y), p)) <= 1e-12;
      if (refines(x, y) != act_zero) ++failures_here;
      if (equivalent(x, y) != same_partition) ++failures_here;
      // A relabeled copy is the same partition.
      std::vector<Label> relabeled(y.labels().begin(), y.labels().end());
      for (auto& l : relabeled) l = 10 - 3 * l;
      if (!equivalent(y, RandomVariable(relabeled))) ++failures_here;
      if (equivalent(x, y)) {
        if (std::abs(entropy(p, x) - entropy(p, y)) > 1e-12) ++failures_here;
        for (const auto& w : parts) {
          const auto hw = entropy_function(w);
          if (std::abs(act(x, hw, p) - act(y, hw, p)) > 1e-12) ++failures_here;
        }
      }
    }
  }
  return {failures_here == 0,
          std::to_string(failures_here) + " failures over " + std::to_string(pairs) + " pairs"};
}

Outcome deformation_continuity() {
  std::mt19937_64 rng(111);
  double worst_t = 0, worst_k = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto ctx = t::random_pair_context(3, rng);
    const auto shannon = shannon_instance(ctx.pq.p(), ctx.generators);
    const auto kl_inst = kl_instance(ctx.pq, ctx.generators);
    for (double a : {1 - 1e-5, 1 + 1e-5}) {
      const auto ts = tsallis_instance(ctx.pq.p(), ctx.generators, Alpha(a));
      const auto ak = alpha_kl_instance(ctx.pq, ctx.generators, Alpha(a));
      for (Mask y = 0; y < 8; ++y) {
        for (Mask z = 0; z < 8; ++z) {
          worst_t = std::max(worst_t, std::abs(ts.conditional(E(y), E(z)) - shannon.conditional(E(y), E(z))));
          worst_k = std::max(worst_k, std::abs(ak.conditional(E(y), E(z)) - kl_inst.conditional(E(y), E(z))));
        }
      }
    }
  }
  return {worst_t <= 1e-4 && worst_k <= 1e-4,
          fmt("tsallis gap %.2e, ", worst_t) + fmt("alpha-kl gap %.2e", worst_k)};
}

}  // namespace

int main() {
  criterion(1, "XOR interaction information", 1, xor_interaction);
  criterion(2, "BSC mutual KL divergence", 1, bsc_divergence);
  criterion(3, "generalization-error synergy", 1, advantage_synergy);
  criterion(4, "Hu identity sweep", 300, hu_sweep);
  criterion(5, "Mobius oracle equivalence", 300, mobius_equivalence);
  criterion(6, "atom and interaction identities", 300, corollary_identities);
  criterion(7, "relative computation", 300, relative_computation);
  criterion(8, "conditioned split decomposition", 300, split_identity);
  criterion(9, "equivalence of random variables", 300, equivalence_theory);
  criterion(10, "continuity of deformations", 300, deformation_continuity);
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
