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
#include <random>
#include <string>
#include <vector>

#include "infodiagram/compressor.hpp"
#include "infodiagram/diagram.hpp"
#include "infodiagram/errors.hpp"
#include "infodiagram/setfun.hpp"
#include "infodiagram/shannon.hpp"
#include "infodiagram/verify.hpp"
#include "support/random_contexts.hpp"

namespace infodiagram {
namespace {

using E = MonoidElement;

SetFunction cardinality_function(int n) {
  return SetFunction::from(n, [](Mask a) { return double(cardinality(a)); });
}

TEST(SetFunction, RejectsWrongTableSize) {
  EXPECT_THROW(SetFunction(2, {0, 1, 2}), DomainError);
}

TEST(R1Instance, ConstantHasNoInteractions) {
  const auto inst = r1_instance(SetFunction::from(3, [](Mask) { return 2.5; }));
  for (Mask i = 1; i < 8; ++i) EXPECT_EQ(mu_atom(inst, AtomId(i)), 0.0);
}

TEST(R1Instance, ModularHasNoPairInteraction) {
  const auto inst = r1_instance(cardinality_function(3));
  const std::vector<E> terms{E(1), E(2)};
  EXPECT_EQ(interaction(inst, terms, E{}), 0.0);
}

TEST(R1Instance, ChainRuleIsExact) {
  std::mt19937_64 rng(1);
  const auto inst = r1_instance(testing::random_setfunction(4, rng));
  EXPECT_TRUE(chain_rule_violations(inst, 1e-12).empty());
  const auto report = verify_hu(inst, 3, 1e-12);
  EXPECT_TRUE(report.passed()) << report.max_residual;
}

TEST(Submodular, ModularAndEntropyHold) {
  EXPECT_TRUE(is_submodular(cardinality_function(4)).holds);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ctx = testing::random_shannon_context(3, rng);
    const auto h = SetFunction::from(3, [&](Mask a) {
      return entropy(ctx.p, joint_of(ctx.generators, E(a)));
    });
    EXPECT_TRUE(is_submodular(h).holds);
  }
}

TEST(Submodular, ConstructedViolationHasWitness) {
  const SetFunction r(2, {0.0, 1.0, 1.0, 3.0});
  const auto check = is_submodular(r);
  EXPECT_FALSE(check.holds);
  EXPECT_EQ(check.failure, SubmodularityCheck::Failure::submodularity);
  EXPECT_EQ(check.a, Mask{1});
  EXPECT_EQ(check.b, Mask{2});
}

TEST(Submodular, NormalizationAndMonotonicityFailures) {
  EXPECT_EQ(is_submodular(SetFunction(1, {1.0, 2.0})).failure,
            SubmodularityCheck::Failure::normalization);
  const auto check = is_submodular(SetFunction(2, {0.0, 1.0, 1.0, 0.5}));
  EXPECT_EQ(check.failure, SubmodularityCheck::Failure::monotonicity);
  EXPECT_EQ(check.b, Mask{3});
}

TEST(ConditionalMutual, EqualsPairInteraction) {
  std::mt19937_64 rng(3);
  const auto r = testing::random_setfunction(4, rng);
  const auto inst = r1_instance(r);
  for (Mask a = 0; a < 16; ++a) {
    for (Mask b = 0; b < 16; ++b) {
      for (Mask c = 0; c < 16; c += 3) {
        const std::vector<E> terms{E(a), E(b)};
        EXPECT_NEAR(conditional_mutual(r, a, b, c), interaction(inst, terms, E(c)), 1e-12);
      }
    }
  }
  EXPECT_EQ(conditional_mutual(r, 0b0011, 0b0100, 0b0011), 0.0);
}

TEST(ConditionalMutual, XorEntropyTriple) {
  const EmpiricalData d =
      empirical_from_rows({{"0", "0", "0"}, {"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}});
  const auto h = SetFunction::from(3, [&](Mask a) {
    return entropy(d.dist, joint_of(d.variables, E(a)), LogBase::bits);
  });
  EXPECT_NEAR(conditional_mutual(h, 1, 2, 0), 0.0, 1e-12);
  EXPECT_NEAR(conditional_mutual(h, 1, 2, 4), 1.0, 1e-12);
}

TEST(Advantage, XorSynergyIsMinusOne) {
  const EmpiricalData d =
      empirical_from_rows({{"0", "0", "0"}, {"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}});
  const std::vector<RandomVariable> features{d.variables[0], d.variables[1]};
  const auto e = bayes_error_evaluator(d.dist, features, d.variables[2], LogBase::bits);
  EXPECT_NEAR(e(0), 1.0, 1e-12);
  EXPECT_NEAR(e(1), 1.0, 1e-12);
  EXPECT_NEAR(e(2), 1.0, 1e-12);
  EXPECT_NEAR(e(3), 0.0, 1e-12);
  const std::vector<E> terms{E(1), E(2)};
  EXPECT_NEAR(interaction(advantage_instance(e), terms, E{}), -1.0, 1e-12);
}

TEST(Advantage, ConstantEvaluatorHasNoAdvantage) {
  const auto inst = advantage_instance(SetFunction::from(3, [](Mask) { return 0.7; }));
  for (Mask y = 0; y < 8; ++y) EXPECT_EQ(inst.conditional(E(y), E(1)), 0.0);
}

TEST(Advantage, PairTermExpandsToFourEvaluations) {
  std::mt19937_64 rng(4);
  const auto e = testing::random_setfunction(3, rng);
  const auto inst = advantage_instance(e);
  for (Mask a = 0; a < 8; ++a) {
    for (Mask b = 0; b < 8; ++b) {
      const std::vector<E> terms{E(a), E(b)};
      EXPECT_NEAR(interaction(inst, terms, E{}), e(0) - e(a) - e(b) + e(a | b), 1e-12);
    }
  }
}

TEST(Advantage, MonotoneEvaluatorGivesNonnegativeConditionals) {
  std::mt19937_64 rng(5);
  const auto inst = advantage_instance(testing::random_monotone_evaluator(4, rng));
  for (Mask y = 0; y < 16; ++y) {
    for (Mask z = 0; z < 16; ++z) EXPECT_GE(inst.conditional(E(y), E(z)), -1e-12);
  }
  EXPECT_TRUE(verify_hu(inst, 3, 1e-12).passed());
}

TEST(BayesError, FunctionalAndIndependentTargets) {
  const Dist p({0.1, 0.2, 0.3, 0.4});
  const RandomVariable f({0, 0, 1, 1});
  const RandomVariable g({0, 1, 0, 1});
  const std::vector<RandomVariable> features{f};
  EXPECT_NEAR(bayes_error_evaluator(p, features, f)(1), 0.0, 1e-15);
  const Dist uniform = Dist::uniform(4);
  const auto e = bayes_error_evaluator(uniform, features, g);
  EXPECT_NEAR(e(0), std::log(2.0), 1e-15);
  EXPECT_NEAR(e(1), std::log(2.0), 1e-15);
}

TEST(BayesError, MonotoneUnderInclusion) {
  std::mt19937_64 rng(6);
  const auto ctx = testing::random_shannon_context(4, rng);
  const std::vector<RandomVariable> features(ctx.generators.begin(), ctx.generators.begin() + 3);
  const auto e = bayes_error_evaluator(ctx.p, features, ctx.generators[3]);
  for (Mask a = 0; a < 8; ++a) {
    for (Mask b = 0; b < 8; ++b) {
      if ((a & b) == a) EXPECT_GE(e(a), e(b) - 1e-12);
    }
  }
}

Bytes bytes(const std::string& s) { return Bytes(s.begin(), s.end()); }

TEST(Compressor, CanonicalEncodingIsLengthPrefixedAndOrdered) {
  const std::vector<Bytes> blobs{bytes("ab"), bytes("c")};
  const Bytes enc = canonical_encoding(blobs, 0b11);
  ASSERT_EQ(enc.size(), 8u + 2 + 8 + 1);
  EXPECT_EQ(enc[0], 2);
  EXPECT_EQ(enc[8], 'a');
  EXPECT_EQ(enc[10], 1);
  EXPECT_TRUE(canonical_encoding(blobs, 0).empty());
}

TEST(Compressor, DeterministicAndExact) {
  const std::vector<Bytes> blobs{bytes(std::string(200, 'x') + "tail"), bytes("hello hello hello"),
                                 bytes(std::string(200, 'x') + "tail")};
  const ZlibCompressor zlib;
  const SetFunction a = compressor_setfunction(blobs, zlib);
  const SetFunction b = compressor_setfunction(blobs, zlib);
  for (Mask s = 0; s < 8; ++s) EXPECT_EQ(a(s), b(s));
  EXPECT_EQ(zlib.compress(canonical_encoding(blobs, 0b101)),
            zlib.compress(canonical_encoding(blobs, 0b101)));
  EXPECT_LT(a(0b101), a(0b001) + a(0b100));
  const auto report = verify_hu(r1_instance(a), 3, 1e-12);
  EXPECT_TRUE(report.passed());
  EXPECT_NE(zlib.name().find("level 9"), std::string::npos);
}

class FailingCompressor final : public Compressor {
 public:
  Bytes compress(std::span<const std::uint8_t> input) const override {
    if (input.size() > 20) throw std::runtime_error("boom");
    return Bytes(input.begin(), input.end());
  }
  std::string name() const override { return "failing"; }
};

TEST(Compressor, FailureNamesTheSubset) {
  const std::vector<Bytes> blobs{bytes("0123456789abcdef"), bytes("z")};
  try {
    compressor_setfunction(blobs, FailingCompressor{});
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("{1"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace infodiagram
