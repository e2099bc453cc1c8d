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

#include "infodiagram/divergences.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "infodiagram/errors.hpp"

namespace infodiagram {

DistPair::DistPair(Dist p, Dist q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.size() != q_.size()) {
    throw DomainError("P and Q live on sample spaces of different size");
  }
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (q_[i] == 0.0 && p_[i] > 0.0) {
      throw PreconditionError("P is not absolutely continuous w.r.t. Q: point " +
                              std::to_string(i) + " has Q = 0 < P = " + std::to_string(p_[i]));
    }
  }
}

Alpha::Alpha(double value) : value_(value) {
  if (!std::isfinite(value)) throw DomainError("alpha must be finite");
  if (value == 1.0) {
    throw DomainError("alpha = 1 is the undeformed case; use entropy() or kl() instead");
  }
}

namespace {

// Masses are raised to nonpositive powers when alpha <= 0.
void require_positive_masses(const Dist& d, Alpha a, const char* which) {
  if (a.value() > 0.0) return;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < kMinPositiveMass) {
      throw DomainError(std::string("alpha <= 0 requires strictly positive masses; ") + which +
                        " has mass " + std::to_string(d[i]) + " at point " + std::to_string(i));
    }
  }
}

// Masses of the cells of X_{Y u Z} and X_Z, plus the Z-cell containing each
// (Y u Z)-cell. Conditioning on Z = z restricts to the (Y u Z)-cells whose
// parent is z; renormalizing by the Z-cell mass gives P|_{Z=z} pushed to X_Y.
struct CellSums {
  std::vector<double> p_joint, q_joint, p_cond, q_cond;
  std::vector<std::uint32_t> parent;
};

CellSums cell_sums(const JointPartitions& parts, const Dist& p, const Dist* q, Mask y, Mask z) {
  const Mask yz = y | z;
  const auto& joint_labels = parts.labels(yz);
  const auto& cond_labels = parts.labels(z);
  CellSums s;
  s.p_joint.assign(parts.value_count(yz), 0.0);
  s.p_cond.assign(parts.value_count(z), 0.0);
  s.parent.assign(parts.value_count(yz), 0);
  if (q != nullptr) {
    s.q_joint.assign(parts.value_count(yz), 0.0);
    s.q_cond.assign(parts.value_count(z), 0.0);
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    s.p_joint[joint_labels[i]] += p[i];
    s.p_cond[cond_labels[i]] += p[i];
    s.parent[joint_labels[i]] = cond_labels[i];
    if (q != nullptr) {
      s.q_joint[joint_labels[i]] += (*q)[i];
      s.q_cond[cond_labels[i]] += (*q)[i];
    }
  }
  return s;
}

// Per Z-cell accumulator: sum over (Y u Z)-cells of term(P(y|z), Q(y|z)).
template <class Term>
std::vector<double> per_condition(const CellSums& s, bool with_q, Term term) {
  std::vector<double> acc(s.p_cond.size(), 0.0);
  for (std::size_t c = 0; c < s.p_joint.size(); ++c) {
    const std::uint32_t z = s.parent[c];
    if (s.p_cond[z] <= 0.0) continue;
    const double pc = s.p_joint[c] / s.p_cond[z];
    const double qc = with_q ? s.q_joint[c] / s.q_cond[z] : 0.0;
    acc[z] += term(pc, qc);
  }
  return acc;
}

double tsallis_of_masses(std::span<const double> masses, double a) {
  double sum = 0.0;
  for (double m : masses) {
    if (m > 0.0 || a <= 0.0) sum += std::pow(m, a);
  }
  return (sum - 1.0) / (1.0 - a);
}

std::shared_ptr<const JointPartitions> partitions(std::span<const RandomVariable> gens,
                                                  std::size_t size) {
  return std::make_shared<const JointPartitions>(gens, size);
}

}  // namespace

double tsallis_entropy(const Dist& p, const RandomVariable& x, Alpha a) {
  const Marginal px = marginal(p, x);
  if (a.value() <= 0.0) {
    for (double m : px.masses) {
      if (m < kMinPositiveMass) {
        throw DomainError("alpha <= 0 requires strictly positive marginal masses");
      }
    }
  }
  return tsallis_of_masses(px.masses, a.value());
}

ChainRuleInstance tsallis_instance(const Dist& p, std::span<const RandomVariable> generators,
                                   Alpha a) {
  require_positive_masses(p, a, "P");
  auto parts = partitions(generators, p.size());
  auto dist = std::make_shared<const Dist>(p);
  const double alpha = a.value();
  auto k1 = [parts, dist, alpha](MonoidElement y, MonoidElement z) {
    const CellSums s = cell_sums(*parts, *dist, nullptr, y.bits, z.bits);
    const auto power_sums = per_condition(s, false, [alpha](double pc, double) {
      return (pc > 0.0 || alpha <= 0.0) ? std::pow(pc, alpha) : 0.0;
    });
    double sum = 0.0;
    for (std::size_t zc = 0; zc < s.p_cond.size(); ++zc) {
      if (s.p_cond[zc] <= 0.0) continue;
      const double conditional = (power_sums[zc] - 1.0) / (1.0 - alpha);
      sum += std::pow(s.p_cond[zc], alpha) * conditional;
    }
    return sum;
  };
  return make_instance(parts->generators(), k1, "tsallis");
}

ActionForm<Dist> tsallis_action_form(std::vector<RandomVariable> generators, Alpha a) {
  auto gens = std::make_shared<const std::vector<RandomVariable>>(std::move(generators));
  ActionForm<Dist> form;
  form.f1 = [gens, a](MonoidElement y) {
    RandomVariable x = joint_of(*gens, y);
    return ShannonFunction([x, a](const Dist& p) { return tsallis_entropy(p, x, a); }, "T");
  };
  form.act = [gens, a](MonoidElement e, const ShannonFunction& f) {
    if (e.is_neutral()) return f;
    RandomVariable x = joint_of(*gens, e);
    return ShannonFunction(
        [x, f, a](const Dist& p) {
          const Marginal px = marginal(p, x);
          double sum = 0.0;
          for (std::size_t k = 0; k < px.labels.size(); ++k) {
            if (px.masses[k] > 0.0) {
              sum += std::pow(px.masses[k], a.value()) * f(condition(p, x, px.labels[k]));
            }
          }
          return sum;
        },
        "X._a" + f.tag());
  };
  return form;
}

double kl(const DistPair& pq, const RandomVariable& x, LogBase base) {
  const Marginal px = marginal(pq.p(), x);
  const Marginal qx = marginal(pq.q(), x);
  double sum = 0.0;
  for (std::size_t k = 0; k < px.labels.size(); ++k) {
    if (px.masses[k] > 0.0) sum += px.masses[k] * std::log(px.masses[k] / qx.masses[k]);
  }
  return sum * log_scale(base);
}

double alpha_kl(const DistPair& pq, const RandomVariable& x, Alpha a) {
  const Marginal px = marginal(pq.p(), x);
  const Marginal qx = marginal(pq.q(), x);
  const double alpha = a.value();
  double sum = 0.0;
  for (std::size_t k = 0; k < px.labels.size(); ++k) {
    if (px.masses[k] > 0.0 || alpha <= 0.0) {
      if (alpha <= 0.0 && (px.masses[k] < kMinPositiveMass || qx.masses[k] < kMinPositiveMass)) {
        throw DomainError("alpha <= 0 requires strictly positive marginal masses");
      }
      sum += std::pow(px.masses[k], alpha) * std::pow(qx.masses[k], 1.0 - alpha);
    }
  }
  return (sum - 1.0) / (alpha - 1.0);
}

double cross_entropy(const DistPair& pq, const RandomVariable& x, LogBase base) {
  const Marginal px = marginal(pq.p(), x);
  const Marginal qx = marginal(pq.q(), x);
  double sum = 0.0;
  for (std::size_t k = 0; k < px.labels.size(); ++k) {
    if (px.masses[k] > 0.0) sum -= px.masses[k] * std::log(qx.masses[k]);
  }
  return sum * log_scale(base);
}

ChainRuleInstance kl_instance(const DistPair& pq, std::span<const RandomVariable> generators,
                              LogBase base) {
  auto parts = partitions(generators, pq.size());
  auto pair = std::make_shared<const DistPair>(pq);
  const double scale = log_scale(base);
  auto k1 = [parts, pair, scale](MonoidElement y, MonoidElement z) {
    const CellSums s = cell_sums(*parts, pair->p(), &pair->q(), y.bits, z.bits);
    const auto inner = per_condition(s, true, [](double pc, double qc) {
      return pc > 0.0 ? pc * std::log(pc / qc) : 0.0;
    });
    double sum = 0.0;
    for (std::size_t zc = 0; zc < s.p_cond.size(); ++zc) {
      if (s.p_cond[zc] > 0.0) sum += s.p_cond[zc] * inner[zc];
    }
    return sum * scale;
  };
  return make_instance(parts->generators(), k1, "kl");
}

ChainRuleInstance alpha_kl_instance(const DistPair& pq,
                                    std::span<const RandomVariable> generators, Alpha a) {
  require_positive_masses(pq.p(), a, "P");
  require_positive_masses(pq.q(), a, "Q");
  auto parts = partitions(generators, pq.size());
  auto pair = std::make_shared<const DistPair>(pq);
  const double alpha = a.value();
  auto k1 = [parts, pair, alpha](MonoidElement y, MonoidElement z) {
    const CellSums s = cell_sums(*parts, pair->p(), &pair->q(), y.bits, z.bits);
    const auto inner = per_condition(s, true, [alpha](double pc, double qc) {
      return (pc > 0.0 || alpha <= 0.0) ? std::pow(pc, alpha) * std::pow(qc, 1.0 - alpha) : 0.0;
    });
    double sum = 0.0;
    for (std::size_t zc = 0; zc < s.p_cond.size(); ++zc) {
      if (s.p_cond[zc] <= 0.0) continue;
      const double weight = std::pow(s.p_cond[zc], alpha) * std::pow(s.q_cond[zc], 1.0 - alpha);
      sum += weight * (inner[zc] - 1.0) / (alpha - 1.0);
    }
    return sum;
  };
  return make_instance(parts->generators(), k1, "alpha-kl");
}

ChainRuleInstance cross_entropy_instance(const DistPair& pq,
                                         std::span<const RandomVariable> generators,
                                         LogBase base) {
  auto parts = partitions(generators, pq.size());
  auto pair = std::make_shared<const DistPair>(pq);
  const double scale = log_scale(base);
  auto k1 = [parts, pair, scale](MonoidElement y, MonoidElement z) {
    const CellSums s = cell_sums(*parts, pair->p(), &pair->q(), y.bits, z.bits);
    const auto inner = per_condition(s, true, [](double pc, double qc) {
      return pc > 0.0 ? -pc * std::log(qc) : 0.0;
    });
    double sum = 0.0;
    for (std::size_t zc = 0; zc < s.p_cond.size(); ++zc) {
      if (s.p_cond[zc] > 0.0) sum += s.p_cond[zc] * inner[zc];
    }
    return sum * scale;
  };
  return make_instance(parts->generators(), k1, "cross-entropy");
}

namespace {

using PairFunction = InfoFunction<DistPair>;

// X.F for two-distribution contexts: both P and Q are conditioned on X = x,
// and the term is weighted by weight(P_X(x), Q_X(x)).
template <class Weight>
ActionForm<DistPair> pair_action_form(std::vector<RandomVariable> generators,
                                      std::function<double(const DistPair&,
                                                           const RandomVariable&)> value,
                                      Weight weight, std::string tag) {
  auto gens = std::make_shared<const std::vector<RandomVariable>>(std::move(generators));
  ActionForm<DistPair> form;
  form.f1 = [gens, value, tag](MonoidElement y) {
    RandomVariable x = joint_of(*gens, y);
    return PairFunction([x, value](const DistPair& pq) { return value(pq, x); }, tag);
  };
  form.act = [gens, weight](MonoidElement e, const PairFunction& f) {
    if (e.is_neutral()) return f;
    RandomVariable x = joint_of(*gens, e);
    return PairFunction(
        [x, f, weight](const DistPair& pq) {
          const Marginal px = marginal(pq.p(), x);
          const Marginal qx = marginal(pq.q(), x);
          double sum = 0.0;
          for (std::size_t k = 0; k < px.labels.size(); ++k) {
            if (px.masses[k] <= 0.0) continue;
            DistPair conditioned(condition(pq.p(), x, px.labels[k]),
                                 condition(pq.q(), x, px.labels[k]));
            sum += weight(px.masses[k], qx.masses[k]) * f(conditioned);
          }
          return sum;
        },
        "X." + f.tag());
  };
  return form;
}

}  // namespace

ActionForm<DistPair> kl_action_form(std::vector<RandomVariable> generators, LogBase base) {
  return pair_action_form(
      std::move(generators),
      [base](const DistPair& pq, const RandomVariable& x) { return kl(pq, x, base); },
      [](double p, double) { return p; }, "D");
}

ActionForm<DistPair> alpha_kl_action_form(std::vector<RandomVariable> generators, Alpha a) {
  return pair_action_form(
      std::move(generators),
      [a](const DistPair& pq, const RandomVariable& x) { return alpha_kl(pq, x, a); },
      [alpha = a.value()](double p, double q) {
        return std::pow(p, alpha) * std::pow(q, 1.0 - alpha);
      },
      "D_a");
}

ActionForm<DistPair> cross_entropy_action_form(std::vector<RandomVariable> generators,
                                               LogBase base) {
  return pair_action_form(
      std::move(generators),
      [base](const DistPair& pq, const RandomVariable& x) { return cross_entropy(pq, x, base); },
      [](double p, double) { return p; }, "C");
}

BinaryChannelPair binary_symmetric_channels(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw DomainError("epsilon must lie in [0, 1]");
  // Points (x, y) at index 2x + y.
  Dist p = Dist::uniform(4);
  Dist q = Dist::from_weights({(1.0 - epsilon) / 2, epsilon / 2, epsilon / 2, (1.0 - epsilon) / 2});
  std::vector<RandomVariable> gens{RandomVariable({0, 0, 1, 1}), RandomVariable({0, 1, 0, 1})};
  return BinaryChannelPair{DistPair(std::move(p), std::move(q)), std::move(gens)};
}

}  // namespace infodiagram
