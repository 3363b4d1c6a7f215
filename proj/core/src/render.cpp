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

#include "qgen/render.hpp"

namespace qgen {

std::string render(const QRat& r) {
  return "{\"num\":" + render(r.num()) + ",\"den\":" + render(r.den()) + "}";
}

std::string render(const Scalar& s) {
  if (s.is_symbolic()) return render(s.symbolic());
  return '"' + s.exact().to_string() + '"';
}

}  // namespace qgen
