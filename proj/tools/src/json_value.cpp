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

#include "qgen/cli/json_value.hpp"

#include "qgen/cli/config.hpp"
#include "qgen/render.hpp"

namespace qgen::cli {

namespace {

QPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("expected an array of coefficient strings");
  std::vector<Rat> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw UsageError("coefficients must be strings");
    c.push_back(Rat::parse(e.get<std::string>()));
  }
  return QPoly(std::move(c));
}

}  // namespace

Json to_json(const Rat& r) { return r.to_string(); }

Json to_json(const QRat& r) {
  // constants collapse to the plain rational string
  if (r.num().degree() <= 0 && r.den().degree() <= 0) return to_json(r.eval(Rat(0)));
  Json j = Json::object();
  j["num"] = coefficient_strings(r.num());
  j["den"] = coefficient_strings(r.den());
  return j;
}

Json to_json(const Scalar& s) { return s.is_symbolic() ? to_json(s.symbolic()) : to_json(s.exact()); }

Json to_json(const XPoly& p) {
  Json j = Json::object();
  j["x"] = coefficient_strings(p);
  return j;
}

QRat qrat_from_json(const Json& j) {
  if (j.is_string()) return QRat(Rat::parse(j.get<std::string>()));
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw UsageError("expected {\"num\": [...], \"den\": [...]}");
  }
  return QRat(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace qgen::cli
