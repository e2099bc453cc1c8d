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

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "infodiagram/compressor.hpp"
#include "infodiagram/divergences.hpp"
#include "infodiagram/setfun.hpp"
#include "infodiagram/shannon.hpp"

namespace infodiagram {

// Column holding per-row sample weights in tabular input.
inline constexpr const char* kWeightColumn = "__weight";

// A delimited table: header row of variable names, one sample per row.
struct Table {
  std::vector<std::string> header;  // without the weight column
  std::vector<std::vector<std::string>> rows;
  std::optional<std::vector<double>> weights;
};

// Comma- or tab-separated (tab when the header contains one). Double quotes
// delimit fields containing separators; "" escapes a quote. Errors carry the
// 1-based line number.
Table parse_table(std::istream& in, const std::string& source = "<input>");
Table read_table(const std::string& path);

// P and Q from two tables with identical headers, on the union of their
// distinct rows. A row present in P but absent from Q makes the DistPair
// constructor throw PreconditionError.
struct EmpiricalPair {
  DistPair pq;
  std::vector<RandomVariable> variables;
  std::vector<std::string> names;
};
EmpiricalPair empirical_pair(const Table& p_table, const Table& q_table);

// {"n": 2, "values": {"[]": 0, "[1]": 1.0, "[2]": 1.0, "[1,2]": 1.5}}; keys
// are JSON index lists (1-based, any order), every subset required.
SetFunction setfunction_from_json(const nlohmann::json& doc);
SetFunction read_setfunction(const std::string& path);
nlohmann::json setfunction_to_json(const SetFunction& r);

Bytes read_bytes(const std::string& path);

}  // namespace infodiagram
