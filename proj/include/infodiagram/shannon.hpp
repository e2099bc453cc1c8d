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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "infodiagram/action_form.hpp"
#include "infodiagram/instance.hpp"
#include "infodiagram/monoid.hpp"

namespace infodiagram {

enum class LogBase { nats, bits };

// Multiplier turning a natural logarithm into the requested base.
double log_scale(LogBase base);
const char* to_string(LogBase base);
LogBase parse_log_base(const std::string& text);

// Probability mass function over sample points 0..size()-1.
class Dist {
 public:
  Dist() = default;
  // Throws DomainError on negative/non-finite masses or a total off 1 by more than 1e-12.
  explicit Dist(std::vector<double> masses);
  // Normalizes nonnegative weights with a positive finite sum.
  static Dist from_weights(std::vector<double> weights);
  static Dist uniform(std::size_t size);

  std::size_t size() const { return masses_.size(); }
  double operator[](std::size_t i) const { return masses_[i]; }
  std::span<const double> masses() const { return masses_; }

 private:
  std::vector<double> masses_;
};

using Label = std::int64_t;

// A random variable on a finite sample space, given by the label of each
// sample point. Only the induced partition matters for every measure here.
class RandomVariable {
 public:
  RandomVariable() = default;
  explicit RandomVariable(std::vector<Label> labels) : labels_(std::move(labels)) {}
  // The constant variable on a space of the given size.
  static RandomVariable constant(std::size_t size) {
    return RandomVariable(std::vector<Label>(size, 0));
  }

  std::size_t size() const { return labels_.size(); }
  Label operator()(std::size_t point) const { return labels_[point]; }
  std::span<const Label> labels() const { return labels_; }

  // Labels renumbered 0..k-1 by first appearance; k = value_count().
  RandomVariable canonical() const;
  std::size_t value_count() const;

 private:
  std::vector<Label> labels_;
};

// Pushforward P_X, one entry per distinct label in ascending label order.
struct Marginal {
  std::vector<Label> labels;
  std::vector<double> masses;

  double mass_of(Label x) const;
};

Marginal marginal(const Dist& p, const RandomVariable& x);

// P|_{X=x}: P restricted to X^{-1}(x) and renormalized. P itself when P_X(x) = 0.
Dist condition(const Dist& p, const RandomVariable& x, Label value);

double entropy(const Dist& p, const RandomVariable& x, LogBase base = LogBase::nats);

// The joint XY, labeled by pairs (canonically renumbered).
RandomVariable joint(const RandomVariable& x, const RandomVariable& y);
// Joint of the generators whose bits are set; the constant variable for 1.
RandomVariable joint_of(std::span<const RandomVariable> generators, MonoidElement element);

// Same induced partition.
bool equivalent(const RandomVariable& x, const RandomVariable& y);
// True iff y is a function of x (x's partition refines y's), written Y <~ X.
bool refines(const RandomVariable& x, const RandomVariable& y);

using ShannonFunction = InfoFunction<Dist>;

// P -> H(X; P).
ShannonFunction entropy_function(const RandomVariable& x, LogBase base = LogBase::nats);
// (X.F)(P) = sum_x P_X(x) F(P|_{X=x}).
double act(const RandomVariable& x, const ShannonFunction& f, const Dist& p);
ShannonFunction conditioned(const RandomVariable& x, const ShannonFunction& f);

// Labels of the joint of every subset of generators, indexed by mask.
class JointPartitions {
 public:
  JointPartitions(std::span<const RandomVariable> generators, std::size_t sample_size);

  int generators() const { return n_; }
  std::size_t sample_size() const { return sample_size_; }
  // Canonical labels 0..value_count(mask)-1.
  const std::vector<std::uint32_t>& labels(Mask mask) const { return labels_[mask]; }
  std::size_t value_count(Mask mask) const { return counts_[mask]; }

 private:
  int n_ = 0;
  std::size_t sample_size_ = 0;
  std::vector<std::vector<std::uint32_t>> labels_;
  std::vector<std::size_t> counts_;
};

// k1(Y | Z) = H(X_{Y u Z}) - H(X_Z).
ChainRuleInstance shannon_instance(const Dist& p, std::span<const RandomVariable> generators,
                                   LogBase base = LogBase::nats);

// F_1(Y) = H(X_Y) with the averaged-conditioning action.
ActionForm<Dist> shannon_action_form(std::vector<RandomVariable> generators,
                                     LogBase base = LogBase::nats);

struct EmpiricalData {
  Dist dist;
  std::vector<RandomVariable> variables;
  // Distinct rows in sample-point order.
  std::vector<std::vector<std::string>> sample_points;
};

inline constexpr std::size_t kDefaultMaxSamplePoints = 1'000'000;

// Sample space = distinct rows (sorted), masses = normalized (weighted) counts,
// one variable per column. Throws IngestionError with the 1-based row number.
EmpiricalData empirical_from_rows(const std::vector<std::vector<std::string>>& rows,
                                  const std::optional<std::vector<double>>& weights = std::nullopt,
                                  std::size_t max_sample_points = kDefaultMaxSamplePoints);

// A joint distribution on the product of the given alphabets with the
// coordinate projections as variables. Masses are drawn uniformly and
// normalized; with `zero_fraction` > 0 that share of points gets mass 0
// (at least one point stays positive).
struct ProductJoint {
  Dist dist;
  std::vector<RandomVariable> coordinates;
};
ProductJoint random_product_joint(std::span<const int> alphabet_sizes, std::mt19937_64& rng,
                                  double zero_fraction = 0.0);

}  // namespace infodiagram
