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

#include <span>
#include <vector>

#include "infodiagram/action_form.hpp"
#include "infodiagram/instance.hpp"
#include "infodiagram/shannon.hpp"

namespace infodiagram {

// Two distributions on one sample space with P << Q.
class DistPair {
 public:
  // Throws PreconditionError naming the first point with q = 0 < p.
  DistPair(Dist p, Dist q);

  const Dist& p() const { return p_; }
  const Dist& q() const { return q_; }
  std::size_t size() const { return p_.size(); }

 private:
  Dist p_;
  Dist q_;
};

// Exponent of the deformed logarithm; never 1.
class Alpha {
 public:
  explicit Alpha(double value);
  double value() const { return value_; }

 private:
  double value_;
};

// Masses below this are treated as zero when alpha < 0 would blow them up.
inline constexpr double kMinPositiveMass = 1e-300;

// (sum_x P_X(x)^a - 1) / (1 - a). Base-free.
double tsallis_entropy(const Dist& p, const RandomVariable& x, Alpha a);

// k1(Y | Z) = sum_z P_Z(z)^a I^a(X_Y; P|_{Z=z}).
ChainRuleInstance tsallis_instance(const Dist& p, std::span<const RandomVariable> generators,
                                   Alpha a);
ActionForm<Dist> tsallis_action_form(std::vector<RandomVariable> generators, Alpha a);

// -sum_x P_X(x) log(Q_X(x) / P_X(x)).
double kl(const DistPair& pq, const RandomVariable& x, LogBase base = LogBase::nats);

// k1(Y | Z) = sum_z P_Z(z) D_1(X_Y; P|_{Z=z} || Q|_{Z=z}).
ChainRuleInstance kl_instance(const DistPair& pq, std::span<const RandomVariable> generators,
                              LogBase base = LogBase::nats);
ActionForm<DistPair> kl_action_form(std::vector<RandomVariable> generators,
                                    LogBase base = LogBase::nats);

// (sum_x P_X(x)^a Q_X(x)^(1-a) - 1) / (a - 1).
double alpha_kl(const DistPair& pq, const RandomVariable& x, Alpha a);
// Action weights P_Z(z)^a Q_Z(z)^(1-a).
ChainRuleInstance alpha_kl_instance(const DistPair& pq,
                                    std::span<const RandomVariable> generators, Alpha a);
ActionForm<DistPair> alpha_kl_action_form(std::vector<RandomVariable> generators, Alpha a);

// -sum_x P_X(x) log Q_X(x).
double cross_entropy(const DistPair& pq, const RandomVariable& x, LogBase base = LogBase::nats);
ChainRuleInstance cross_entropy_instance(const DistPair& pq,
                                         std::span<const RandomVariable> generators,
                                         LogBase base = LogBase::nats);
ActionForm<DistPair> cross_entropy_action_form(std::vector<RandomVariable> generators,
                                               LogBase base = LogBase::nats);

// Two binary variables X (input) and Y (output) on {0,1}^2: P uses a uniform
// prior and a channel flipping with probability 1/2, Q the same prior with a
// channel flipping with probability epsilon. Generators are {X, Y}.
struct BinaryChannelPair {
  DistPair pq;
  std::vector<RandomVariable> generators;
};
BinaryChannelPair binary_symmetric_channels(double epsilon);

}  // namespace infodiagram
