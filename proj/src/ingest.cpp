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

#include "infodiagram/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include "infodiagram/errors.hpp"

namespace infodiagram {
namespace {

std::vector<std::string> split_line(const std::string& line, char sep, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == sep) {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw IngestionError("unterminated quoted field", line_no);
  fields.push_back(std::move(field));
  return fields;
}

double parse_weight(const std::string& text, std::size_t line_no) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw IngestionError("weight '" + text + "' is not a number", line_no);
  }
  if (!std::isfinite(value) || value < 0.0) {
    throw IngestionError("weight '" + text + "' is negative or not finite", line_no);
  }
  return value;
}

}  // namespace

Table parse_table(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  Table table;
  char sep = ',';
  std::ptrdiff_t weight_col = -1;
  std::size_t width = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_header) {
      if (line.find('\t') != std::string::npos) sep = '\t';
      auto names = split_line(line, sep, line_no);
      width = names.size();
      for (std::size_t c = 0; c < names.size(); ++c) {
        if (names[c] == kWeightColumn) {
          if (weight_col >= 0) throw IngestionError("duplicate weight column", line_no);
          weight_col = static_cast<std::ptrdiff_t>(c);
        } else {
          table.header.push_back(names[c]);
        }
      }
      if (table.header.empty()) throw IngestionError(source + ": no variable columns", line_no);
      if (weight_col >= 0) table.weights.emplace();
      have_header = true;
      continue;
    }
    auto fields = split_line(line, sep, line_no);
    if (fields.size() != width) {
      throw IngestionError(source + ": expected " + std::to_string(width) + " fields, found " +
                               std::to_string(fields.size()),
                           line_no);
    }
    if (weight_col >= 0) {
      table.weights->push_back(parse_weight(fields[weight_col], line_no));
      fields.erase(fields.begin() + weight_col);
    }
    table.rows.push_back(std::move(fields));
  }
  if (!have_header) throw IngestionError(source + ": empty input");
  if (table.rows.empty()) throw IngestionError(source + ": header but no data rows");
  return table;
}

Table read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open '" + path + "'");
  return parse_table(in, path);
}

EmpiricalPair empirical_pair(const Table& p_table, const Table& q_table) {
  if (p_table.header != q_table.header) {
    throw IngestionError("P and Q tables have different columns");
  }
  const std::size_t width = p_table.header.size();
  std::map<std::vector<std::string>, std::pair<double, double>> distinct;
  auto add = [&](const Table& t, bool is_p) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      const double w = t.weights ? (*t.weights)[r] : 1.0;
      auto& slot = distinct[t.rows[r]];
      (is_p ? slot.first : slot.second) += w;
    }
  };
  add(p_table, true);
  add(q_table, false);
  if (distinct.size() > kDefaultMaxSamplePoints) throw IngestionError("too many distinct rows");

  std::vector<std::map<std::string, Label>> ids(width);
  for (const auto& [row, w] : distinct) {
    for (std::size_t c = 0; c < width; ++c) ids[c].emplace(row[c], 0);
  }
  for (auto& col : ids) {
    Label next = 0;
    for (auto& [value, id] : col) id = next++;
  }
  std::vector<double> p_w, q_w;
  std::vector<std::vector<Label>> columns(width);
  for (const auto& [row, w] : distinct) {
    p_w.push_back(w.first);
    q_w.push_back(w.second);
    for (std::size_t c = 0; c < width; ++c) columns[c].push_back(ids[c].at(row[c]));
  }
  Dist p, q;
  try {
    p = Dist::from_weights(std::move(p_w));
    q = Dist::from_weights(std::move(q_w));
  } catch (const DomainError& e) {
    throw IngestionError(e.what());
  }
  std::vector<RandomVariable> vars;
  for (auto& col : columns) vars.emplace_back(std::move(col));
  return EmpiricalPair{DistPair(std::move(p), std::move(q)), std::move(vars), p_table.header};
}

SetFunction setfunction_from_json(const nlohmann::json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    check_generator_count(n);
    const auto& values = doc.at("values");
    if (!values.is_object()) throw IngestionError("'values' must be an object");
    std::vector<double> table(std::size_t{1} << n, 0.0);
    std::vector<bool> seen(table.size(), false);
    for (const auto& [key, value] : values.items()) {
      const auto indices = nlohmann::json::parse(key).get<std::vector<int>>();
      const Mask m = from_index_list(indices, n);
      if (seen[m]) throw IngestionError("subset " + format_subset(m) + " given twice");
      if (!value.is_number()) throw IngestionError("value of " + key + " is not a number");
      table[m] = value.get<double>();
      seen[m] = true;
    }
    for (Mask m = 0; m < table.size(); ++m) {
      if (!seen[m]) throw IngestionError("set function missing subset " + format_subset(m));
    }
    return SetFunction(n, std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError(std::string("set-function JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw IngestionError(std::string("set-function JSON: ") + e.what());
  }
}

SetFunction read_setfunction(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw IngestionError(path + ": " + e.what());
  }
  return setfunction_from_json(doc);
}

nlohmann::json setfunction_to_json(const SetFunction& r) {
  nlohmann::json values = nlohmann::json::object();
  for (Mask m = 0; m < r.values().size(); ++m) {
    values[nlohmann::json(to_index_list(m)).dump()] = r(m);
  }
  return {{"n", r.generators()}, {"values", values}};
}

Bytes read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestionError("cannot open '" + path + "'");
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace infodiagram
