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

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "qgen/rat.hpp"

namespace qgen {

/// Level-N context for the fermionic Riemann sums on Z_p (conductor d = 1).
struct PadicParams {
  unsigned long p = 3;
  long N = 2;
  /// Upper bound on the number of evaluated terms, p^{kN}.
  std::size_t term_budget = 100000;

  void validate() const;
  /// p^N; throws BudgetExceeded if it does not fit a long.
  long modulus() const;
};

/// f(y) = w^y (y + c)^n.
struct ClassicalMonomial {
  long n = 0;
  Rat w{1};
  long c = 0;
};

/// f(x_1..x_k) = prod_j w^{x_j} q^{(h-j) x_j} * [x_1 + ... + x_k + x]_q^m.
struct QBracketMonomial {
  long m = 0;
  long k = 1;
  long h = 1;
  Rat w{1};
  long x = 0;
};

using IntegrandFamily = std::variant<ClassicalMonomial, QBracketMonomial>;

long variable_count(const IntegrandFamily& f);

/// Value of f at an integer point; xs.size() must equal variable_count(f).
Rat evaluate(const IntegrandFamily& f, std::span<const long> xs, const Rat& q);

/// mu_{-q}(a + p^N Z_p) = (-q)^a / [p^N]_{-q}.
Rat measure_value(long a, const PadicParams& params, const Rat& q);

/// Exact level-N approximation of the k-fold fermionic integral of f,
/// each variable normalized by [p^N]_{-q}.
Rat fermionic_sum(const IntegrandFamily& f, const Rat& q, const PadicParams& params);

struct ValuationReport {
  std::vector<long> levels;
  /// v_p(S_N - target); std::nullopt encodes +infinity.
  std::vector<std::optional<long>> valuations;
  /// Residual valuations nondecreasing and the last >= max(levels) - 1.
  bool verdict = false;
};

/// Residual valuations of fermionic_sum(f) - target over the given levels.
/// Requires v_p(q - 1) >= 1 and v_p(w - 1) >= 1.
ValuationReport padic_limit_check(const IntegrandFamily& f, const Rat& target, const Rat& q,
                                  unsigned long p, std::span<const long> levels,
                                  std::size_t term_budget = 100000);

enum class SummationMode { Direct, Cesaro1 };

struct SeriesParams {
  long M = 400;
  SummationMode mode = SummationMode::Direct;
  /// Reported as the tail bound of Cesaro1 results.
  Rat cesaro_tolerance{1, 1000};
};

struct SeriesValue {
  Rat value;
  /// Exact geometric majorant of the neglected tail (Direct), or the
  /// configured Cesaro tolerance (Cesaro1).
  Rat tail_bound;
  long terms = 0;
};

/// I_{-q}(f) = [2]_q^k sum_{x >= 0} (-q)^{x_1 + ... + x_k} f(x) in the |q| < 1
/// regime (|q| <= 1 for classical monomials). Throws DivergenceError when an
/// effective ratio exceeds 1 in absolute value, or equals 1 in Direct mode.
SeriesValue real_series(const IntegrandFamily& f, const Rat& q, const SeriesParams& sp);

/// Level-N residual of q^n I(f_n) = (-1)^n I(f) + [2]_q sum_{l<n} (-1)^{n-1-l} q^l f(l)
/// with f_n(x) = f(x + n). f must be single-variable.
Rat shift_identity_residual(const IntegrandFamily& f, long n_shift, const Rat& q,
                            const PadicParams& params);

/// Applies the verdict rule of ValuationReport to a valuation sequence.
bool valuation_verdict(std::span<const long> levels,
                       std::span<const std::optional<long>> valuations);

}  // namespace qgen
