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

#include <cmath>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "infodiagram/diagram.hpp"
#include "infodiagram/errors.hpp"
#include "infodiagram/instance.hpp"
#include "infodiagram/monoid.hpp"

namespace infodiagram {

// A real-valued function of a context (a distribution, a pair of
// distributions, ...), kept as an evaluatable expression. Closed under
// +, - and the monoid action supplied by an ActionForm.
template <class Context>
class InfoFunction {
 public:
  using Evaluator = std::function<double(const Context&)>;

  InfoFunction() : eval_([](const Context&) { return 0.0; }), tag_("0") {}
  InfoFunction(Evaluator eval, std::string tag) : eval_(std::move(eval)), tag_(std::move(tag)) {}

  double operator()(const Context& ctx) const { return eval_(ctx); }
  const std::string& tag() const { return tag_; }

  friend InfoFunction operator+(const InfoFunction& a, const InfoFunction& b) {
    return InfoFunction([a, b](const Context& c) { return a(c) + b(c); },
                        "(" + a.tag_ + " + " + b.tag_ + ")");
  }
  friend InfoFunction operator-(const InfoFunction& a, const InfoFunction& b) {
    return InfoFunction([a, b](const Context& c) { return a(c) - b(c); },
                        "(" + a.tag_ + " - " + b.tag_ + ")");
  }

 private:
  Evaluator eval_;
  std::string tag_;
};

// The action-based presentation of a measure: F_1 as a function-valued map
// on the monoid together with the monoid action X.F.
template <class Context>
struct ActionForm {
  std::function<InfoFunction<Context>(MonoidElement)> f1;
  std::function<InfoFunction<Context>(MonoidElement, const InfoFunction<Context>&)> act;
};

// F_q(L_1; ...; L_q) built by F_q = F_{q-1} - L_q.F_{q-1}, then acted on by J.
template <class Context>
InfoFunction<Context> action_interaction(const ActionForm<Context>& form,
                                         std::span<const MonoidElement> terms,
                                         MonoidElement condition) {
  if (terms.empty()) throw DomainError("interaction requires q >= 1");
  InfoFunction<Context> f = form.f1(terms[0]);
  for (std::size_t k = 1; k < terms.size(); ++k) {
    f = f - form.act(terms[k], f);
  }
  return form.act(condition, f);
}

struct ActionMismatch {
  std::vector<MonoidElement> terms;
  MonoidElement condition;
  double action_value;
  double two_argument_value;
};

// Evaluates J.F_q(L_1; ...; L_q) at `ctx` through the action and compares it
// with K_q(L_1; ...; L_q | J) of `inst`, which must describe the same measure
// at the same context. Exhaustive over q <= q_max and all subset tuples.
template <class Context>
std::vector<ActionMismatch> action_form_mismatches(const ChainRuleInstance& inst,
                                                   const ActionForm<Context>& form,
                                                   const Context& ctx, int q_max, double tol) {
  std::vector<ActionMismatch> out;
  InteractionEvaluator eval(inst);
  const Mask limit = Mask{1} << inst.n;
  std::vector<MonoidElement> terms;
  for (int q = 1; q <= q_max; ++q) {
    terms.assign(q, MonoidElement{});
    std::size_t tuples = std::size_t{1} << (inst.n * q);
    for (std::size_t code = 0; code < tuples; ++code) {
      std::size_t rest = code;
      for (int k = 0; k < q; ++k) {
        terms[k] = MonoidElement(static_cast<Mask>(rest % limit));
        rest /= limit;
      }
      for (Mask j = 0; j < limit; ++j) {
        double via_action = action_interaction(form, terms, MonoidElement(j))(ctx);
        double via_k1 = eval(terms, MonoidElement(j));
        if (!(std::abs(via_action - via_k1) <= tol)) {
          out.push_back({terms, MonoidElement(j), via_action, via_k1});
        }
      }
    }
  }
  return out;
}

}  // namespace infodiagram
