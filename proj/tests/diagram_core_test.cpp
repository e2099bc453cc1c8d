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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <vector>

#include "infodiagram/diagram.hpp"
#include "infodiagram/errors.hpp"
#include "infodiagram/monoid.hpp"
#include "infodiagram/region.hpp"
#include "infodiagram/setfun.hpp"
#include "infodiagram/shannon.hpp"
#include "infodiagram/verify.hpp"
#include "support/random_contexts.hpp"

namespace infodiagram {
namespace {

using E = MonoidElement;

TEST(Monoid, ProductIsCommutativeIdempotentWithNeutral) {
  for (Mask a = 0; a < 16; ++a) {
    for (Mask b = 0; b < 16; ++b) {
      EXPECT_EQ(E(a) * E(b), E(b) * E(a));
      EXPECT_EQ(E(a) * E(a), E(a));
      EXPECT_EQ(E(a) * E{}, E(a));
    }
  }
}

TEST(Monoid, IndexListsAreOneBased) {
  EXPECT_EQ(to_index_list(0b101), (std::vector<int>{1, 3}));
  EXPECT_EQ(from_index_list({3, 1}, 3), Mask{0b101});
  EXPECT_EQ(format_subset(0b101), "{1,3}");
  EXPECT_EQ(format_subset(0), "{}");
  EXPECT_THROW(from_index_list({4}, 3), DomainError);
  EXPECT_THROW(AtomId(0), DomainError);
}

TEST(Monoid, GeneratorCapHonorsEnvironment) {
  EXPECT_NO_THROW(check_generator_count(kDefaultMaxGenerators));
  EXPECT_THROW(check_generator_count(kDefaultMaxGenerators + 1), DomainError);
  ::setenv("INFODIAGRAM_MAX_N", "14", 1);
  EXPECT_NO_THROW(check_generator_count(14));
  EXPECT_THROW(check_generator_count(15), DomainError);
  ::unsetenv("INFODIAGRAM_MAX_N");
}

TEST(Region, AtomCountAndCircles) {
  EXPECT_EQ(atoms(3).size(), 7u);
  const RegionMask c = circle_region(E(0b001), 3);
  EXPECT_EQ(c.members(), (std::vector<Mask>{1, 3, 5, 7}));
  EXPECT_TRUE(circle_region(E{}, 3).empty());
  EXPECT_EQ(circle_region(E::all(3), 3).size(), 7u);
}

TEST(Region, HuRegionIsIntersectionMinusExcluded) {
  const std::vector<E> l{E(0b001), E(0b010)};
  EXPECT_EQ(hu_region(l, E{}, 3).members(), (std::vector<Mask>{3, 7}));
  EXPECT_EQ(hu_region(l, E(0b100), 3).members(), (std::vector<Mask>{3}));
  const std::vector<E> with_neutral{E(0b001), E{}};
  EXPECT_TRUE(hu_region(with_neutral, E{}, 3).empty());
  EXPECT_THROW(hu_region(std::vector<E>{}, E{}, 3), DomainError);
}

TEST(Region, SetAlgebra) {
  RegionMask a = circle_region(E(0b01), 2);
  const RegionMask b = circle_region(E(0b10), 2);
  EXPECT_EQ((a & b).members(), (std::vector<Mask>{3}));
  EXPECT_EQ((a - b).members(), (std::vector<Mask>{1}));
  EXPECT_EQ((a | b).size(), 3u);
  EXPECT_THROW(a |= circle_region(E(1), 3), DomainError);
}

// R(A) = |A| puts unit mass on each singleton atom and nothing elsewhere.
TEST(MuAtom, ModularSetFunctionHasSingletonAtoms) {
  const auto inst = r1_instance(SetFunction::from(4, [](Mask a) { return double(cardinality(a)); }));
  const AtomTable t = mu_table(inst);
  for (Mask i = 1; i < 16; ++i) {
    EXPECT_EQ(t[i], cardinality(i) == 1 ? 1.0 : 0.0) << format_subset(i);
  }
}

// R(A) = [A nonempty] gives R_1(A | B) = 0 for every nonempty B, so only the
// top atom carries mass: sum over nonempty K of (-1)^{|K|+1} = 1.
TEST(MuAtom, IndicatorOfNonemptyLivesOnTopAtom) {
  const auto inst = r1_instance(SetFunction::from(3, [](Mask a) { return a ? 1.0 : 0.0; }));
  const AtomTable t = mu_table(inst);
  for (Mask i = 1; i < 8; ++i) EXPECT_EQ(t[i], i == 7 ? 1.0 : 0.0) << format_subset(i);
}

TEST(MuAtom, TwoVariableShannonMatchesTextbook) {
  // P(x,y) on four points; X = first bit, Y = second bit.
  const Dist p({0.4, 0.1, 0.2, 0.3});
  const std::vector<RandomVariable> g{RandomVariable({0, 0, 1, 1}), RandomVariable({0, 1, 0, 1})};
  const auto inst = shannon_instance(p, g);
  const double hx = -(0.5 * std::log(0.5) * 2);
  const double hy = -(0.6 * std::log(0.6) + 0.4 * std::log(0.4));
  double hxy = 0;
  for (double m : {0.4, 0.1, 0.2, 0.3}) hxy -= m * std::log(m);
  EXPECT_NEAR(mu_atom(inst, AtomId(0b01)), hxy - hy, 1e-14);
  EXPECT_NEAR(mu_atom(inst, AtomId(0b10)), hxy - hx, 1e-14);
  EXPECT_NEAR(mu_atom(inst, AtomId(0b11)), hx + hy - hxy, 1e-14);
}

TEST(MuAtom, AtomsSumToCircleTotals) {
  std::mt19937_64 rng(7);
  const auto ctx = testing::random_shannon_context(4, rng);
  const auto inst = shannon_instance(ctx.p, ctx.generators);
  const AtomTable t = mu_table(inst);
  for (Mask k = 1; k < 16; ++k) {
    EXPECT_NEAR(mu_region(t, circle_region(E(k), 4)), inst.total(E(k)), 1e-12);
  }
}

TEST(MuAtom, MobiusOracleAgrees) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n) {
    const auto inst = r1_instance(testing::random_setfunction(n, rng));
    const AtomTable closed = mu_table(inst);
    const AtomTable solved = mobius_oracle(inst);
    for (Mask i = 1; i < (Mask{1} << n); ++i) EXPECT_NEAR(closed[i], solved[i], 1e-10);
  }
}

TEST(MuAtom, MobiusOracleRejectsLargeN) {
  const auto inst = r1_instance(SetFunction::from(6, [](Mask) { return 0.0; }));
  EXPECT_THROW(mobius_oracle(inst), DomainError);
}

TEST(MuAtom, ParallelMatchesSerialBitForBit) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 7; ++n) {
    const auto ctx = testing::random_shannon_context(n, rng, 20);
    const auto inst = tabulate(shannon_instance(ctx.p, ctx.generators));
    EXPECT_EQ(mu_table(inst).values, serial::mu_table(inst).values);
    EXPECT_EQ(total_table(inst), serial::total_table(inst));
  }
}

TEST(Interaction, RecursionMatchesInclusionExclusion) {
  std::mt19937_64 rng(5);
  const auto inst = r1_instance(testing::random_setfunction(4, rng));
  std::uniform_int_distribution<Mask> pick(0, 15);
  for (int trial = 0; trial < 200; ++trial) {
    const int q = 1 + trial % 4;
    std::vector<E> terms;
    for (int k = 0; k < q; ++k) terms.emplace_back(pick(rng));
    const E cond(pick(rng));
    EXPECT_NEAR(interaction(inst, terms, cond), interaction_incl_excl(inst, terms, cond), 1e-12);
  }
}

TEST(Interaction, EtaEqualsAtomMeasure) {
  std::mt19937_64 rng(9);
  const auto ctx = testing::random_shannon_context(4, rng);
  const auto inst = shannon_instance(ctx.p, ctx.generators);
  for (Mask i = 1; i < 16; ++i) EXPECT_NEAR(eta(inst, AtomId(i)), mu_atom(inst, AtomId(i)), 1e-12);
}

TEST(Interaction, NeutralTermVanishes) {
  std::mt19937_64 rng(13);
  const auto inst = r1_instance(testing::random_setfunction(3, rng));
  const std::vector<E> terms{E(0b011), E{}};
  EXPECT_NEAR(interaction(inst, terms, E(0b100)), 0.0, 1e-12);
  EXPECT_THROW(interaction(inst, std::vector<E>{}, E{}), DomainError);
}

TEST(Interaction, SymmetricUnderPermutation) {
  std::mt19937_64 rng(17);
  const auto inst = r1_instance(testing::random_setfunction(4, rng));
  std::vector<E> terms{E(0b0011), E(0b0110), E(0b1000)};
  const double base = interaction(inst, terms, E(0b0100));
  std::sort(terms.begin(), terms.end());
  do {
    EXPECT_NEAR(interaction(inst, terms, E(0b0100)), base, 1e-12);
  } while (std::next_permutation(terms.begin(), terms.end()));
}

TEST(ChainRule, DetectsCorruptedValue) {
  std::mt19937_64 rng(19);
  const auto good = r1_instance(testing::random_setfunction(3, rng));
  EXPECT_TRUE(chain_rule_violations(good, 1e-12).empty());
  auto k1 = good.k1;
  const auto bad = make_instance(3, [k1](E y, E z) {
    return k1(y, z) + ((y.bits == 1 && z.bits == 0) ? 0.1 : 0.0);
  }, "corrupted");
  EXPECT_FALSE(chain_rule_violations(bad, 1e-9).empty());
  EXPECT_THROW(require_chain_rule(bad, 1e-9), VerificationError);
}

TEST(Verify, ExactInstancePassesExhaustively) {
  std::mt19937_64 rng(23);
  const auto inst = r1_instance(testing::random_setfunction(4, rng));
  const DiagramReport r = verify_hu(inst, 3, 1e-12);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(r.passed()) << r.max_residual;
  // Every (L_1..L_q, J) with q <= 3 over 16 elements.
  EXPECT_EQ(r.cases_checked, std::size_t{16 * 16 + 16 * 16 * 16 + 16 * 16 * 16 * 16});
  EXPECT_EQ(r.residuals.size(), r.cases_checked);
}

TEST(Verify, ParallelMatchesSerial) {
  std::mt19937_64 rng(29);
  const auto ctx = testing::random_shannon_context(3, rng);
  const auto inst = shannon_instance(ctx.p, ctx.generators);
  const DiagramReport a = verify_hu(inst);
  const DiagramReport b = serial::verify_hu(inst);
  ASSERT_EQ(a.residuals.size(), b.residuals.size());
  EXPECT_EQ(a.max_residual, b.max_residual);
  for (std::size_t i = 0; i < a.residuals.size(); ++i) {
    EXPECT_EQ(a.residuals[i].lhs, b.residuals[i].lhs);
    EXPECT_EQ(a.residuals[i].rhs, b.residuals[i].rhs);
    EXPECT_EQ(a.residuals[i].intersected, b.residuals[i].intersected);
  }
}

TEST(Verify, SampledModeIsSeededAndDeterministic) {
  std::mt19937_64 rng(31);
  const auto ctx = testing::random_shannon_context(6, rng, 16);
  const auto inst = shannon_instance(ctx.p, ctx.generators);
  VerifyOptions o;
  o.samples = 500;
  o.seed = 4;
  const DiagramReport a = verify_hu(inst, o);
  const DiagramReport b = verify_hu(inst, o);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_EQ(a.cases_checked, 500u);
  EXPECT_TRUE(a.passed()) << a.max_residual;
  ASSERT_EQ(a.residuals.size(), b.residuals.size());
  for (std::size_t i = 0; i < a.residuals.size(); ++i) {
    EXPECT_EQ(a.residuals[i].excluded, b.residuals[i].excluded);
  }
}

TEST(Verify, CorruptedInstanceFailsWithChainRuleCheck) {
  std::mt19937_64 rng(37);
  const auto good = r1_instance(testing::random_setfunction(3, rng));
  auto k1 = good.k1;
  const auto bad = make_instance(3, [k1](E y, E z) {
    return k1(y, z) + ((y.bits == 1 && z.bits == 0) ? 0.1 : 0.0);
  }, "corrupted");
  EXPECT_THROW(verify_hu(bad), VerificationError);
  VerifyOptions o;
  o.check_chain_rule = false;
  o.keep_all_rows = false;
  const DiagramReport r = verify_hu(bad, o);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.residuals.empty());
  for (const auto& row : r.residuals) EXPECT_GT(row.residual, o.tol);
}

TEST(Relative, FixesLeadingTermAndCondition) {
  std::mt19937_64 rng(41);
  const auto ctx = testing::random_shannon_context(4, rng);
  const auto inst = shannon_instance(ctx.p, ctx.generators);
  const std::vector<E> fixed{E(0b0001)};
  const E z(0b1000);
  const auto rel = relative_instance(inst, fixed, z);
  EXPECT_TRUE(chain_rule_violations(rel, 1e-12).empty());
  const std::vector<E> v{E(0b0010), E(0b0100)};
  const std::vector<E> all{E(0b0001), E(0b0010), E(0b0100)};
  EXPECT_NEAR(interaction(rel, v, E{}), interaction(inst, all, z), 1e-12);
}

}  // namespace
}  // namespace infodiagram
