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

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "infodiagram/diagram.hpp"
#include "infodiagram/instance.hpp"
#include "infodiagram/verify.hpp"

namespace infodiagram {

struct DocumentMetadata {
  std::string instance;
  std::optional<std::string> base;
  std::optional<double> alpha;
  double tolerance = 1e-9;
  std::vector<std::string> generators;
  // Compressor identity for compression-based set functions.
  std::optional<std::string> compressor;
};

struct VerificationSummary {
  int q_max = 0;
  double max_residual = 0;
  std::size_t cases_checked = 0;
  bool exhaustive = true;
  bool passed = true;
};

// Atom values, circle totals and a verification summary for one instance.
struct DiagramDocument {
  DocumentMetadata metadata;
  AtomTable atoms;            // eta_I = mu(p_I)
  std::vector<double> totals;  // F_1(X_K) by mask; totals[0] = 0
  VerificationSummary verification;

  int generators() const { return atoms.n; }
};

DiagramDocument build_document(const ChainRuleInstance& inst, DocumentMetadata metadata,
                               const VerifyOptions& options);

// max over K of |F_1(X_K) - sum of eta_I over atoms meeting K|.
double consistency_residual(const DiagramDocument& doc);

nlohmann::json to_json(const DiagramDocument& doc);
DiagramDocument document_from_json(const nlohmann::json& doc);
// Atom table as CSV: subset,eta.
std::string atoms_csv(const DiagramDocument& doc);

nlohmann::json to_json(const ResidualRow& row);
nlohmann::json report_to_json(const DiagramReport& report, const DocumentMetadata& metadata,
                              const std::vector<ChainRuleViolation>& chain_rule);
// Residual table as CSV: q,L,J,lhs,rhs,residual.
std::string report_csv(const DiagramReport& report);

// Canonical text: sorted keys, shortest round-trip reals, trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace infodiagram
