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

#include <functional>
#include <string>

#include "qgen/padic.hpp"
#include "qgen/scalar.hpp"

namespace qgen::detail {

/// prod_{l<k} (1 + w q^{top - l}); throws VanishingDenominator naming `label`
/// and l when a factor vanishes.
Scalar shifted_product(const Rat& w, long top, long k, const Context& ctx,
                       const std::string& label);

/// [2]_q^k sum_n C(n+k-1, n)_q (-w)^n g(n) for 0 < q < 1 under the given mode.
/// `g_bound` must bound |g(n)| for every n; it feeds the Direct tail bound.
SeriesValue binomial_weighted_series(long k, const Rat& w, const Rat& q, const SeriesParams& sp,
                                     const std::function<Rat(long)>& g, const Rat& g_bound);

}  // namespace qgen::detail
