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

#include <vector>

#include "qgen/padic.hpp"
#include "qgen/scalar.hpp"

namespace qgen {

/// Parameters of E_{m,q}^{(h,k)}(w, x). w = 1 is the untwisted family.
struct QEulerSpec {
  long m = 0;
  long h = 1;
  long k = 1;
  long x = 0;
  Rat w{1};
};

/// Closed form
///   [2]_q^k (1-q)^{-m} sum_j C(m,j) (-1)^j q^{xj} / prod_{l<k} (1 + w q^{j+h-l}).
/// Throws VanishingDenominator naming (j, l) when a factor is zero.
Scalar qeuler_hk(const QEulerSpec& spec, const Context& ctx);

/// Boundary series [2]_q^k sum_n C(n+k-1,n)_q (-1)^n [n+x]_q^m for h = k-1,
/// w = 1. Only Cesaro1 is accepted.
SeriesValue qeuler_hk_series(const QEulerSpec& spec, const Rat& q, const SeriesParams& sp);

/// Twisted series [2]_q^k sum_n C(n+k-1,n)_q (-w)^n [n+x]_q^m for h = k-1.
/// |w| < 1 may use Direct (with an exact tail bound); |w| = 1 needs Cesaro1.
SeriesValue qeuler_twisted_hk_series(const QEulerSpec& spec, const Rat& q,
                                     const SeriesParams& sp);

/// E_{n,q}(w) = [2]_q (1-q)^{-n} sum_j C(n,j) (-1)^j / (1 + q^{j+1} w).
Scalar qeuler_twisted(long n, const Rat& w, const Context& ctx);

enum class GfKind { F_qk, h_qk, h_qkw };

struct GfValue {
  /// Exponential-sum side, exponentials truncated to t_terms terms.
  Rat lhs;
  /// Closed-form side sum_n c_n t^n / n!.
  Rat rhs;
  /// The c_n used for rhs.
  std::vector<Rat> rhs_coeffs;
};

/// Evaluates both sides of F_q^k(t, x), h_q^k(t) or h_{q,w}^k(t) at a
/// rational t with 0 < q < 1. x is used by F_qk only; w by F_qk (twisted
/// F when w != 1) and h_qkw. The exponentials are truncated to t_terms
/// terms and the closed-form side to the matching powers of t.
GfValue gf_eval(GfKind kind, long k, long x, const Rat& w, const Rat& q, const Rat& t,
                const SeriesParams& sp, long t_terms = 8);

}  // namespace qgen
