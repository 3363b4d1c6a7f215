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

#include <map>
#include <string>
#include <vector>

#include "qgen/cli/config.hpp"
#include "qgen/cli/json_value.hpp"

namespace qgen::cli {

struct Query {
  std::string family;
  std::string mode = "exact";
  std::map<std::string, std::string> params;
  bool poly = false;
};

const std::vector<std::string>& family_names();
const std::vector<std::string>& parameter_names();

/// Parameters a family accepts, checked before dispatch.
const std::vector<std::string>& family_parameters(const std::string& family);

Json run_query(const Query& query, const Config& config);

}  // namespace qgen::cli
