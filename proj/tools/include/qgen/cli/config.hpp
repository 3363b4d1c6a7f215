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

#include <cstddef>
#include <stdexcept>
#include <string>

#include "qgen/rat.hpp"

namespace qgen::cli {

/// Bad flags, malformed numbers, unknown parameters. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  unsigned long p = 3;
  long N = 2;
  long M = 400;
  std::size_t term_budget = 100000;
  Rat cesaro_tolerance{1, 1000};
  std::size_t table_budget = 10000;
};

Config load_config_file(const std::string& path);

/// Defaults overlaid with the file named by QGEN_CONFIG, if set.
Config load_config();

}  // namespace qgen::cli
