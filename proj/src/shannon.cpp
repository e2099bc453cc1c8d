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

#include "infodiagram/shannon.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numeric>
#include <unordered_map>

#include "infodiagram/errors.hpp"

namespace infodiagram {

double log_scale(LogBase base) { return base == LogBase::bits ? 1.0 / std::log(2.0) : 1.0; }

const char* to_string(LogBase base) { return base == LogBase::bits ? "bits" : "nats"; }

LogBase parse_log_base(const std::string& text) {
  if (text == "nats") return LogBase::nats;
  if (text == "bits") return LogBase::bits;
  throw DomainError("unknown log base '" + text + "' (expected nats or bits)");
}

Dist::Dist(std::vector<double> masses) : masses_(std::move(masses)) {
  double total = 0.0;
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    if (!std::isfinite(masses_[i]) || masses_[i] < 0.0) {
      throw DomainError("mass at point " + std::to_string(i) + " is negative or not finite");
    }
    total += masses_[i];
  }
  if (!(std::abs(total - 1.0) <= 1e-12)) {
    throw DomainError("masses sum to " + std::to_string(total) + ", not 1");
  }
}

Dist Dist::from_weights(std::vector<double> weights) {
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
      throw DomainError("weight at point " + std::to_string(i) + " is negative or not finite");
    }
    total += weights[i];
  }
  if (!(total > 0.0) || !std::isfinite(total)) throw DomainError("weights must have a positive sum");
  Dist d;
  d.masses_ = std::move(weights);
  for (double& m : d.masses_) m /= total;
  return d;
}

Dist Dist::uniform(std::size_t size) {
  if (size == 0) throw DomainError("uniform distribution needs a nonempty space");
  return from_weights(std::vector<double>(size, 1.0));
}

RandomVariable RandomVariable::canonical() const {
  std::unordered_map<Label, Label> ids;
  std::vector<Label> out(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = ids.emplace(labels_[i], static_cast<Label>(ids.size()));
    out[i] = it->second;
  }
  return RandomVariable(std::move(out));
}

std::size_t RandomVariable::value_count() const {
  std::vector<Label> sorted(labels_);
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

double Marginal::mass_of(Label x) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), x);
  return (it != labels.end() && *it == x) ? masses[it - labels.begin()] : 0.0;
}

namespace {

void require_same_space(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DomainError(std::string(what) + ": sample-space size mismatch (" + std::to_string(a) +
                      " vs " + std::to_string(b) + ")");
  }
}

double plogp_sum(std::span<const double> masses) {
  double h = 0.0;
  for (double m : masses) {
    if (m > 0.0) h -= m * std::log(m);
  }
  return h;
}

}  // namespace

Marginal marginal(const Dist& p, const RandomVariable& x) {
  require_same_space(p.size(), x.size(), "marginal");
  std::map<Label, double> acc;
  for (std::size_t i = 0; i < p.size(); ++i) acc[x(i)] += p[i];
  Marginal out;
  for (auto [label, mass] : acc) {
    out.labels.push_back(label);
    out.masses.push_back(mass);
  }
  return out;
}

Dist condition(const Dist& p, const RandomVariable& x, Label value) {
  require_same_space(p.size(), x.size(), "condition");
  double mass = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (x(i) == value) mass += p[i];
  }
  if (mass == 0.0) return p;
  std::vector<double> restricted(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (x(i) == value) restricted[i] = p[i];
  }
  return Dist::from_weights(std::move(restricted));
}

double entropy(const Dist& p, const RandomVariable& x, LogBase base) {
  return plogp_sum(marginal(p, x).masses) * log_scale(base);
}

RandomVariable joint(const RandomVariable& x, const RandomVariable& y) {
  require_same_space(x.size(), y.size(), "joint");
  std::map<std::pair<Label, Label>, Label> ids;
  std::vector<Label> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [it, inserted] = ids.emplace(std::pair{x(i), y(i)}, static_cast<Label>(ids.size()));
    out[i] = it->second;
  }
  return RandomVariable(std::move(out));
}

RandomVariable joint_of(std::span<const RandomVariable> generators, MonoidElement element) {
  if (generators.empty()) throw DomainError("joint_of needs at least one generator");
  RandomVariable acc = RandomVariable::constant(generators[0].size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (element.contains(static_cast<int>(i))) acc = joint(acc, generators[i]);
  }
  if ((element.bits >> generators.size()) != 0) throw DomainError("element outside [n]");
  return acc;
}

bool equivalent(const RandomVariable& x, const RandomVariable& y) {
  require_same_space(x.size(), y.size(), "equivalent");
  auto cx = x.canonical();
  auto cy = y.canonical();
  return std::equal(cx.labels().begin(), cx.labels().end(), cy.labels().begin());
}

bool refines(const RandomVariable& x, const RandomVariable& y) {
  require_same_space(x.size(), y.size(), "refines");
  std::unordered_map<Label, Label> image;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [it, inserted] = image.emplace(x(i), y(i));
    if (!inserted && it->second != y(i)) return false;
  }
  return true;
}

ShannonFunction entropy_function(const RandomVariable& x, LogBase base) {
  return ShannonFunction([x, base](const Dist& p) { return entropy(p, x, base); },
                         std::string("H[") + to_string(base) + "]");
}

double act(const RandomVariable& x, const ShannonFunction& f, const Dist& p) {
  const Marginal px = marginal(p, x);
  double sum = 0.0;
  for (std::size_t k = 0; k < px.labels.size(); ++k) {
    if (px.masses[k] > 0.0) sum += px.masses[k] * f(condition(p, x, px.labels[k]));
  }
  return sum;
}

ShannonFunction conditioned(const RandomVariable& x, const ShannonFunction& f) {
  return ShannonFunction([x, f](const Dist& p) { return act(x, f, p); }, "X." + f.tag());
}

JointPartitions::JointPartitions(std::span<const RandomVariable> generators,
                                 std::size_t sample_size)
    : n_(static_cast<int>(generators.size())), sample_size_(sample_size) {
  check_generator_count(n_);
  std::vector<std::vector<std::uint32_t>> gen_labels(n_);
  std::vector<std::size_t> gen_counts(n_);
  for (int i = 0; i < n_; ++i) {
    require_same_space(generators[i].size(), sample_size, "generator");
    auto c = generators[i].canonical();
    gen_labels[i].assign(c.labels().begin(), c.labels().end());
    gen_counts[i] = c.value_count();
  }
  const Mask limit = Mask{1} << n_;
  labels_.resize(limit);
  counts_.resize(limit);
  labels_[0].assign(sample_size, 0);
  counts_[0] = sample_size == 0 ? 0 : 1;
  for (Mask m = 1; m < limit; ++m) {
    const Mask rest = m & (m - 1);
    const int low = std::countr_zero(m);
    const auto& a = labels_[rest];
    const auto& b = gen_labels[low];
    std::unordered_map<std::uint64_t, std::uint32_t> ids;
    auto& out = labels_[m];
    out.resize(sample_size);
    for (std::size_t i = 0; i < sample_size; ++i) {
      const std::uint64_t code = std::uint64_t{a[i]} * gen_counts[low] + b[i];
      auto [it, inserted] = ids.emplace(code, static_cast<std::uint32_t>(ids.size()));
      out[i] = it->second;
    }
    counts_[m] = ids.size();
  }
}

ChainRuleInstance shannon_instance(const Dist& p, std::span<const RandomVariable> generators,
                                   LogBase base) {
  JointPartitions parts(generators, p.size());
  const Mask limit = Mask{1} << parts.generators();
  auto h = std::make_shared<std::vector<double>>(limit);
  const double scale = log_scale(base);
  for (Mask m = 0; m < limit; ++m) {
    std::vector<double> masses(parts.value_count(m), 0.0);
    const auto& labels = parts.labels(m);
    for (std::size_t i = 0; i < p.size(); ++i) masses[labels[i]] += p[i];
    (*h)[m] = plogp_sum(masses) * scale;
  }
  auto k1 = [h](MonoidElement y, MonoidElement z) { return (*h)[y.bits | z.bits] - (*h)[z.bits]; };
  return make_instance(parts.generators(), k1, "shannon");
}

ActionForm<Dist> shannon_action_form(std::vector<RandomVariable> generators, LogBase base) {
  auto gens = std::make_shared<const std::vector<RandomVariable>>(std::move(generators));
  ActionForm<Dist> form;
  form.f1 = [gens, base](MonoidElement y) { return entropy_function(joint_of(*gens, y), base); };
  form.act = [gens](MonoidElement x, const ShannonFunction& f) {
    if (x.is_neutral()) return f;
    return conditioned(joint_of(*gens, x), f);
  };
  return form;
}

EmpiricalData empirical_from_rows(const std::vector<std::vector<std::string>>& rows,
                                  const std::optional<std::vector<double>>& weights,
                                  std::size_t max_sample_points) {
  if (rows.empty()) throw IngestionError("table has no rows");
  const std::size_t width = rows[0].size();
  if (width == 0) throw IngestionError("table has no columns", 1);
  if (weights && weights->size() != rows.size()) {
    throw IngestionError("weight count does not match row count");
  }
  std::map<std::vector<std::string>, double> distinct;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw IngestionError("expected " + std::to_string(width) + " columns, found " +
                               std::to_string(rows[r].size()),
                           r + 1);
    }
    const double w = weights ? (*weights)[r] : 1.0;
    if (!std::isfinite(w) || w < 0.0) throw IngestionError("weight is negative or not finite", r + 1);
    distinct[rows[r]] += w;
    if (distinct.size() > max_sample_points) {
      throw IngestionError("more than " + std::to_string(max_sample_points) +
                               " distinct sample points",
                           r + 1);
    }
  }
  double total = 0.0;
  for (const auto& [row, w] : distinct) total += w;
  if (!(total > 0.0)) throw IngestionError("weights sum to zero");

  std::vector<std::map<std::string, Label>> value_ids(width);
  for (const auto& [row, w] : distinct) {
    for (std::size_t c = 0; c < width; ++c) value_ids[c].emplace(row[c], 0);
  }
  for (auto& ids : value_ids) {
    Label next = 0;
    for (auto& [value, id] : ids) id = next++;
  }

  EmpiricalData out;
  std::vector<double> masses;
  std::vector<std::vector<Label>> columns(width);
  for (const auto& [row, w] : distinct) {
    masses.push_back(w);
    for (std::size_t c = 0; c < width; ++c) columns[c].push_back(value_ids[c].at(row[c]));
    out.sample_points.push_back(row);
  }
  out.dist = Dist::from_weights(std::move(masses));
  for (auto& col : columns) out.variables.emplace_back(std::move(col));
  return out;
}


ProductJoint random_product_joint(std::span<const int> alphabet_sizes, std::mt19937_64& rng,
                                  double zero_fraction) {
  if (alphabet_sizes.empty()) throw DomainError("need at least one coordinate");
  std::size_t points = 1;
  for (int size : alphabet_sizes) {
    if (size < 1) throw DomainError("alphabet sizes must be positive");
    points *= static_cast<std::size_t>(size);
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weights(points);
  for (double& w : weights) w = unit(rng) < zero_fraction ? 0.0 : 0.05 + unit(rng);
  if (std::all_of(weights.begin(), weights.end(), [](double w) { return w == 0.0; })) {
    weights[std::uniform_int_distribution<std::size_t>(0, points - 1)(rng)] = 1.0;
  }
  ProductJoint out{Dist::from_weights(std::move(weights)), {}};
  std::size_t stride = 1;
  for (int size : alphabet_sizes) {
    std::vector<Label> labels(points);
    for (std::size_t i = 0; i < points; ++i) labels[i] = static_cast<Label>((i / stride) % size);
    out.coordinates.emplace_back(std::move(labels));
    stride *= static_cast<std::size_t>(size);
  }
  return out;
}

}  // namespace infodiagram
