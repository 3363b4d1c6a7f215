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

// Test-only reference computations. These deliberately avoid the library's
// ExpSeries, Gaussian-binomial table and box-sum code paths.

#include <vector>

#include "qgen/padic.hpp"
#include "qgen/poly.hpp"
#include "qgen/rat.hpp"

namespace qgen::oracle {

/// Euler numbers from sum_{i<=n} C(n,i) E_i + E_n = 2 [n == 0].
inline std::vector<Rat> euler_numbers(long n_max) {
  std::vector<Rat> e;
  for (long n = 0; n <= n_max; ++n) {
    Rat rhs = (n == 0) ? Rat(2) : Rat(0);
    for (long i = 0; i < n; ++i) rhs -= Rat(binomial(n, i)) * e[i];
    e.push_back(rhs / Rat(2));
  }
  return e;
}

/// Bernoulli numbers from sum_{k<=n} C(n+1,k) B_k = 0, B_0 = 1.
inline std::vector<Rat> bernoulli_numbers(long n_max) {
  std::vector<Rat> b{Rat(1)};
  for (long n = 1; n <= n_max; ++n) {
    Rat acc;
    for (long k = 0; k < n; ++k) acc += Rat(binomial(n + 1, k)) * b[k];
    b.push_back(-acc / Rat(n + 1));
  }
  return b;
}

/// Coefficients c_n of 2/(w e^t + 1) from (w e^t + 1) * sum c t^n/n! = 2.
inline std::vector<Rat> twisted_euler_numbers(long n_max, const Rat& w) {
  std::vector<Rat> c;
  for (long n = 0; n <= n_max; ++n) {
    Rat rhs = (n == 0) ? Rat(2) : Rat(0);
    for (long i = 0; i < n; ++i) rhs -= w * Rat(binomial(n, i)) * c[i];
    c.push_back(rhs / (w + Rat(1)));
  }
  return c;
}

/// Naive product of polynomials in b whose coefficients are QPoly.
inline std::vector<QPoly> bpoly_mul(const std::vector<QPoly>& a, const std::vector<QPoly>& b) {
  std::vector<QPoly> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Level-N fermionic sum by per-point evaluation over every tuple.
inline Rat brute_fermionic_sum(const IntegrandFamily& f, const Rat& q, long P) {
  const long k = variable_count(f);
  std::vector<long> xs(static_cast<std::size_t>(k), 0);
  Rat acc;
  while (true) {
    long s = 0;
    for (long v : xs) s += v;
    acc += evaluate(f, xs, q) * (-q).pow(s);
    std::size_t j = 0;
    while (j < xs.size() && ++xs[j] == P) xs[j++] = 0;
    if (j == xs.size()) break;
  }
  const Rat norm = (Rat(1) - (-q).pow(P)) / (Rat(1) + q);
  return acc / norm.pow(k);
}

}  // namespace qgen::oracle
