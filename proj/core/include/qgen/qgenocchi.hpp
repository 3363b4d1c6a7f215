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

#include "qgen/padic.hpp"
#include "qgen/scalar.hpp"

namespace qgen {

/// G_{n+k,q,w}^{(h,k)}: n is the shifted index.
struct QGenocchiSpec {
  long n = 0;
  long h = 1;
  long k = 1;
  Rat w{1};
};

/// G_{n,q} = n [2]_q (1-q)^{-(n-1)} sum_{l<n} C(n-1,l) (-1)^l / (1 + q^{l+1}).
/// G_{0,q} = 0.
Scalar qgenocchi(long n, const Context& ctx);

/// The fermionic moment of [x]_q^n, equal to G_{n+1,q} / (n+1).
Scalar qgenocchi_moment(long n, const Context& ctx);

/// k! C(n+k,k) [2]_q^k (1-q)^{-n} sum_l C(n,l) (-1)^l / prod_{i<k} (1 + w q^{h+l-i}).
Scalar qgenocchi_hk(const QGenocchiSpec& spec, const Context& ctx);

/// G_{index,q,w}^{(h,k)}; zero for index < k.
Scalar qgenocchi_hk_at(long index, long h, long k, const Rat& w, const Context& ctx);

/// k! C(n+k,k) [2]_q^k sum_m C(m+k-1,m)_q (-w)^m [m]_q^n for h = k-1.
SeriesValue qgenocchi_hk_series(const QGenocchiSpec& spec, const Rat& q,
                                const SeriesParams& sp);

/// G_{n,q,w} = n [2]_q (1-q)^{-(n-1)} sum_{l<n} C(n-1,l) (-1)^l / (1 + q^{l+1} w).
Scalar qgenocchi_twisted(long n, const Rat& w, const Context& ctx);

}  // namespace qgen
