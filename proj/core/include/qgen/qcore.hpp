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

#include "qgen/poly.hpp"
#include "qgen/scalar.hpp"

namespace qgen {

// q-numbers -----------------------------------------------------------------

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
Scalar q_int(long n, const Context& ctx);

/// [x]_{-q} = (1 - (-q)^x) / (1 + q).
Scalar q_bracket_neg(long x, const Context& ctx);

/// [n]_q! with [0]_q! = 1.
Scalar q_factorial(long n, const Context& ctx);

// Gaussian binomials --------------------------------------------------------

/// Which form of the Pascal-type recursion fills the table:
///   Lower:  C(n+1,k) = C(n,k-1) + q^k C(n,k)
///   Upper:  C(n+1,k) = q^{n+1-k} C(n,k-1) + C(n,k)
enum class BinomRecursion { Lower, Upper };

/// Table T[n][k] = C(n,k)_q for 0 <= n <= n_max, 0 <= k <= k_max.
std::vector<std::vector<Scalar>> gauss_binom_table(long n_max, long k_max, const Context& ctx,
                                                   BinomRecursion form = BinomRecursion::Lower);

/// C(n,k)_q via the recursion; 0 when k < 0 or k > n.
Scalar gauss_binom(long n, long k, const Context& ctx,
                   BinomRecursion form = BinomRecursion::Lower);

/// [n]_q! / ([n-k]_q! [k]_q!), computed by exact division.
Scalar gauss_binom_quotient(long n, long k, const Context& ctx);

/// Brute-force oracle: sum over compositions d_0 + ... + d_k = n - k of
/// q^{d_1 + 2 d_2 + ... + k d_k}. Requires 0 <= k <= n.
QPoly gauss_binom_compositions(long n, long k);

// q-Pochhammer products -----------------------------------------------------

/// prod_{i=1}^{n} (1 - b q^{r(i-1)}) with ratio q^r, r = ratio_exponent.
Scalar pochhammer_q(const Scalar& b, long n, long ratio_exponent, const Context& ctx);

/// Coefficients (in b, lowest first) of the product (b;q)_n.
std::vector<Scalar> pochhammer_expand(long n, const Context& ctx);

/// Coefficient of b^k in 1/(b;q)_n, i.e. C(n+k-1, k)_q. Requires n >= 1.
Scalar inv_pochhammer_coeff(long n, long k, const Context& ctx);

/// inv_pochhammer_coeff(n, k) for k = 0..k_max from one shared table.
std::vector<Scalar> inv_pochhammer_coeffs(long n, long k_max, const Context& ctx);

}  // namespace qgen
