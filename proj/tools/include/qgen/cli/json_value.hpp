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

#include "json.hpp"

#include "qgen/poly.hpp"
#include "qgen/qrat.hpp"
#include "qgen/scalar.hpp"

namespace qgen::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& r);
Json to_json(const QRat& r);
Json to_json(const Scalar& s);
/// Polynomials in x render as {"x": [c0, c1, ...]}, lowest degree first.
Json to_json(const XPoly& p);

QRat qrat_from_json(const Json& j);

}  // namespace qgen::cli
