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

#pragma once

#include <string>
#include <vector>

#include "qgen/cli/query.hpp"

namespace qgen::cli {

struct Range {
  std::string name;
  long first = 0;
  long last = 0;

  static Range parse(const std::string& text);
  long size() const { return last < first ? 0 : last - first + 1; }
};

struct TableSpec {
  Query base;
  std::vector<Range> ranges;
  std::string format = "json";
};

/// Rows are ordered lexicographically in the ranged parameters.
std::string render_table(const TableSpec& spec, const Config& config);

}  // namespace qgen::cli
