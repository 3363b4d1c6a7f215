// Copyright 2026 The qgen Authors
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

#include "qgen/cli/table.hpp"

#include <algorithm>
#include <functional>
#include <regex>

#include "qgen/error.hpp"

namespace qgen::cli {

namespace {

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  std::string s = v.dump();
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void for_each_cell(const std::vector<Range>& ranges, std::size_t i, std::vector<long>& point,
                   const std::function<void(const std::vector<long>&)>& fn) {
  if (i == ranges.size()) {
    fn(point);
    return;
  }
  for (long v = ranges[i].first; v <= ranges[i].last; ++v) {
    point[i] = v;
    for_each_cell(ranges, i + 1, point, fn);
  }
}

}  // namespace

Range Range::parse(const std::string& text) {
  static const std::regex re(R"(^([A-Za-z]+)=(-?[0-9]+)\.\.(-?[0-9]+)$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) {
    throw UsageError("range must look like name=a..b, got '" + text + "'");
  }
  try {
    return Range{m[1].str(), std::stol(m[2].str()), std::stol(m[3].str())};
  } catch (const std::out_of_range&) {
    throw UsageError("range bound out of range in '" + text + "'");
  }
}

std::string render_table(const TableSpec& spec, const Config& config) {
  if (spec.format != "json" && spec.format != "csv") {
    throw UsageError("--format must be json or csv");
  }
  if (spec.ranges.empty()) throw UsageError("table needs at least one --range");
  const auto& allowed = family_parameters(spec.base.family);
  std::size_t cells = 1;
  for (std::size_t i = 0; i < spec.ranges.size(); ++i) {
    const Range& r = spec.ranges[i];
    if (std::find(allowed.begin(), allowed.end(), r.name) == allowed.end()) {
      throw UsageError("--" + r.name + " is not a parameter of " + spec.base.family);
    }
    if (spec.base.params.count(r.name)) {
      throw UsageError("'" + r.name + "' is both ranged and fixed");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (spec.ranges[j].name == r.name) throw UsageError("'" + r.name + "' is ranged twice");
    }
    cells *= static_cast<std::size_t>(r.size());
    if (cells > config.table_budget) {
      throw BudgetExceeded("table exceeds the cell budget of " +
                           std::to_string(config.table_budget));
    }
  }

  std::string csv;
  Json rows = Json::array();
  if (spec.format == "csv") {
    for (const auto& r : spec.ranges) csv += r.name + ",";
    csv += "value\n";
  }
  std::vector<long> point(spec.ranges.size());
  for_each_cell(spec.ranges, 0, point, [&](const std::vector<long>& pt) {
    Query q = spec.base;
    for (std::size_t i = 0; i < pt.size(); ++i) q.params[spec.ranges[i].name] = std::to_string(pt[i]);
    Json value = run_query(q, config).at("value");
    if (spec.format == "csv") {
      for (long v : pt) csv += std::to_string(v) + ",";
      csv += csv_cell(value) + "\n";
    } else {
      Json row = Json::object();
      for (std::size_t i = 0; i < pt.size(); ++i) row[spec.ranges[i].name] = pt[i];
      row["value"] = value;
      rows.push_back(row);
    }
  });
  return spec.format == "csv" ? csv : rows.dump(2) + "\n";
}

}  // namespace qgen::cli
