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

#include "infodiagram/document.hpp"

#include <cmath>
#include <sstream>

#include "infodiagram/errors.hpp"

namespace infodiagram {

using nlohmann::json;

DiagramDocument build_document(const ChainRuleInstance& inst, DocumentMetadata metadata,
                               const VerifyOptions& options) {
  DiagramDocument doc;
  doc.metadata = std::move(metadata);
  doc.metadata.tolerance = options.tol;
  doc.totals = total_table(inst);
  doc.atoms = mu_table(inst);

  VerifyOptions summary_only = options;
  summary_only.keep_all_rows = false;
  const DiagramReport report = verify_hu(inst, summary_only);
  doc.verification.q_max = options.q_max;
  doc.verification.max_residual = report.max_residual;
  doc.verification.cases_checked = report.cases_checked;
  doc.verification.exhaustive = report.exhaustive;
  doc.verification.passed = report.passed();
  return doc;
}

double consistency_residual(const DiagramDocument& doc) {
  const Mask limit = Mask{1} << doc.generators();
  double worst = 0.0;
  for (Mask k = 0; k < limit; ++k) {
    double sum = 0.0;
    for (Mask atom = 1; atom < limit; ++atom) {
      if (atom & k) sum += doc.atoms[atom];
    }
    worst = std::max(worst, std::abs(doc.totals[k] - sum));
  }
  return worst;
}

namespace {

json metadata_json(const DocumentMetadata& m) {
  json out = {{"instance", m.instance}, {"tolerance", m.tolerance}, {"generators", m.generators}};
  out["base"] = m.base ? json(*m.base) : json(nullptr);
  out["alpha"] = m.alpha ? json(*m.alpha) : json(nullptr);
  if (m.compressor) {
    out["compressor"] = *m.compressor;
    out["note"] = "compression-based information function";
  }
  return out;
}

DocumentMetadata metadata_from_json(const json& j) {
  DocumentMetadata m;
  m.instance = j.at("instance").get<std::string>();
  m.tolerance = j.at("tolerance").get<double>();
  m.generators = j.at("generators").get<std::vector<std::string>>();
  if (j.contains("base") && !j["base"].is_null()) m.base = j["base"].get<std::string>();
  if (j.contains("alpha") && !j["alpha"].is_null()) m.alpha = j["alpha"].get<double>();
  if (j.contains("compressor")) m.compressor = j["compressor"].get<std::string>();
  return m;
}

json atoms_json(const AtomTable& table) {
  json atoms = json::array();
  for (Mask atom = 1; atom < table.values.size(); ++atom) {
    atoms.push_back({{"subset", to_index_list(atom)}, {"eta", table[atom]}});
  }
  return atoms;
}

}  // namespace

json to_json(const DiagramDocument& doc) {
  json totals = json::array();
  for (Mask k = 1; k < doc.totals.size(); ++k) {
    totals.push_back({{"K", to_index_list(k)}, {"f1", doc.totals[k]}});
  }
  const auto& v = doc.verification;
  return {{"metadata", metadata_json(doc.metadata)},
          {"atoms", atoms_json(doc.atoms)},
          {"totals", totals},
          {"verification",
           {{"q_max", v.q_max},
            {"max_residual", v.max_residual},
            {"cases_checked", v.cases_checked},
            {"exhaustive", v.exhaustive},
            {"passed", v.passed}}}};
}

DiagramDocument document_from_json(const json& j) {
  try {
    DiagramDocument doc;
    doc.metadata = metadata_from_json(j.at("metadata"));
    const int n = static_cast<int>(doc.metadata.generators.size());
    check_generator_count(n);
    const std::size_t limit = std::size_t{1} << n;
    doc.atoms = AtomTable{n, std::vector<double>(limit, 0.0)};
    doc.totals.assign(limit, 0.0);
    std::vector<bool> seen(limit, false);
    for (const auto& a : j.at("atoms")) {
      const Mask m = from_index_list(a.at("subset").get<std::vector<int>>(), n);
      if (m == 0) throw IngestionError("document lists the empty atom");
      doc.atoms.values[m] = a.at("eta").get<double>();
      seen[m] = true;
    }
    for (Mask m = 1; m < limit; ++m) {
      if (!seen[m]) throw IngestionError("document is missing atom " + format_subset(m));
    }
    for (const auto& t : j.at("totals")) {
      const Mask m = from_index_list(t.at("K").get<std::vector<int>>(), n);
      doc.totals[m] = t.at("f1").get<double>();
    }
    const auto& v = j.at("verification");
    doc.verification.q_max = v.at("q_max").get<int>();
    doc.verification.max_residual = v.at("max_residual").get<double>();
    doc.verification.cases_checked = v.at("cases_checked").get<std::size_t>();
    doc.verification.exhaustive = v.at("exhaustive").get<bool>();
    doc.verification.passed = v.at("passed").get<bool>();
    return doc;
  } catch (const json::exception& e) {
    throw IngestionError(std::string("diagram document: ") + e.what());
  } catch (const DomainError& e) {
    throw IngestionError(std::string("diagram document: ") + e.what());
  }
}

namespace {

std::string shortest(double x) {
  // nlohmann emits the shortest round-trip representation.
  return json(x).dump();
}

std::string subset_field(Mask m) {
  std::string out;
  for (int i : to_index_list(m)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
  }
  return out;
}

}  // namespace

std::string atoms_csv(const DiagramDocument& doc) {
  std::ostringstream out;
  out << "subset,eta\n";
  for (Mask atom = 1; atom < doc.atoms.values.size(); ++atom) {
    out << subset_field(atom) << ',' << shortest(doc.atoms[atom]) << '\n';
  }
  return out.str();
}

json to_json(const ResidualRow& row) {
  json terms = json::array();
  for (auto l : row.intersected) terms.push_back(to_index_list(l.bits));
  return {{"q", row.q},
          {"L", terms},
          {"J", to_index_list(row.excluded.bits)},
          {"lhs", row.lhs},
          {"rhs", row.rhs},
          {"residual", row.residual}};
}

json report_to_json(const DiagramReport& report, const DocumentMetadata& metadata,
                    const std::vector<ChainRuleViolation>& chain_rule) {
  json rows = json::array();
  for (const auto& row : report.residuals) rows.push_back(to_json(row));
  json violations = json::array();
  for (const auto& v : chain_rule) {
    violations.push_back({{"Y", to_index_list(v.y.bits)},
                          {"Z", to_index_list(v.z.bits)},
                          {"joint", v.joint},
                          {"decomposed", v.decomposed},
                          {"residual", v.residual}});
  }
  return {{"metadata", metadata_json(metadata)},
          {"atoms", atoms_json(report.atom_values)},
          {"residuals", rows},
          {"max_residual", report.max_residual},
          {"cases_checked", report.cases_checked},
          {"exhaustive", report.exhaustive},
          {"tolerance", report.tolerance},
          {"chain_rule_violations", violations},
          {"passed", report.passed() && chain_rule.empty()}};
}

std::string report_csv(const DiagramReport& report) {
  std::ostringstream out;
  out << "q,L,J,lhs,rhs,residual\n";
  for (const auto& row : report.residuals) {
    std::string terms;
    for (auto l : row.intersected) {
      if (!terms.empty()) terms += '|';
      terms += subset_field(l.bits);
    }
    out << row.q << ',' << terms << ',' << subset_field(row.excluded.bits) << ','
        << shortest(row.lhs) << ',' << shortest(row.rhs) << ',' << shortest(row.residual) << '\n';
  }
  return out.str();
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace infodiagram
