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

#include "qgen/cli/config.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"

namespace qgen::cli {

namespace {

long as_long(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer()) throw UsageError("config: '" + key + "' must be an integer");
  return v.get<long>();
}

Rat as_rat(const nlohmann::json& v, const std::string& key) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (!v.is_string()) throw UsageError("config: '" + key + "' must be a rational string");
  try {
    return Rat::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw UsageError("config: '" + key + "': " + e.what());
  }
}

std::size_t as_count(const nlohmann::json& v, const std::string& key) {
  long n = as_long(v, key);
  if (n < 1) throw UsageError("config: '" + key + "' must be positive");
  return static_cast<std::size_t>(n);
}

}  // namespace

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("config: " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config: top level must be an object");
  Config c;
  for (const auto& [key, v] : j.items()) {
    if (key == "p") {
      long p = as_long(v, key);
      if (p < 3 || !is_prime(p)) throw UsageError("config: p must be an odd prime");
      c.p = static_cast<unsigned long>(p);
    } else if (key == "N") {
      c.N = as_long(v, key);
      if (c.N < 1) throw UsageError("config: N must be >= 1");
    } else if (key == "M") {
      c.M = as_long(v, key);
      if (c.M < 1) throw UsageError("config: M must be >= 1");
    } else if (key == "term_budget") {
      c.term_budget = as_count(v, key);
    } else if (key == "cesaro_tolerance") {
      c.cesaro_tolerance = as_rat(v, key);
      if (c.cesaro_tolerance.sign() <= 0) throw UsageError("config: cesaro_tolerance must be > 0");
    } else if (key == "table_budget") {
      c.table_budget = as_count(v, key);
    } else {
      throw UsageError("config: unknown key '" + key + "'");
    }
  }
  return c;
}

Config load_config() {
  const char* path = std::getenv("QGEN_CONFIG");
  if (path == nullptr || *path == '\0') return Config{};
  return load_config_file(path);
}

}  // namespace qgen::cli
