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

#include "qgen/poly.hpp"
#include "qgen/qrat.hpp"
#include "qgen/scalar.hpp"

namespace qgen {

/// Canonical coefficient strings, lowest degree first ("num/den" each).
template <class Var>
std::vector<std::string> coefficient_strings(const Polynomial<Var>& p) {
  std::vector<std::string> out;
  for (const Rat& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

/// JSON array text of the coefficient strings, e.g. ["0","-1"].
template <class Var>
std::string render(const Polynomial<Var>& p) {
  std::string s = "[";
  bool first = true;
  for (const Rat& c : p.coeffs()) {
    if (!first) s += ',';
    first = false;
    s += '"' + c.to_string() + '"';
  }
  return s + "]";
}

/// {"num":[...],"den":[...]}
std::string render(const QRat& r);

/// Exact values render as "\"num/den\""; symbolic ones as render(QRat).
std::string render(const Scalar& s);

}  // namespace qgen
