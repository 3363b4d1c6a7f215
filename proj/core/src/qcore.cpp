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

#include "qgen/qcore.hpp"

#include <stdexcept>
#include <string>

namespace qgen {

namespace {

void require_nonneg(long v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

void add_compositions(long remaining, long part, long k, long weight, std::vector<Rat>& out) {
  if (part > k) {
    if (remaining == 0) {
      if (static_cast<std::size_t>(weight) >= out.size()) out.resize(weight + 1);
      out[weight] += Rat(1);
    }
    return;
  }
  // part 0 carries no weight, so it absorbs whatever is left at the end
  if (part == 0) {
    for (long d = 0; d <= remaining; ++d) add_compositions(remaining - d, 1, k, weight, out);
    return;
  }
  for (long d = 0; d <= remaining; ++d) {
    add_compositions(remaining - d, part + 1, k, weight + part * d, out);
  }
}

}  // namespace

Scalar q_int(long n, const Context& ctx) {
  require_nonneg(n, "q_int: n");
  if (ctx.is_symbolic()) {
    return Scalar(QRat(QPoly(std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)))));
  }
  Scalar acc = ctx.zero(), p = ctx.one(), q = ctx.q();
  for (long i = 0; i < n; ++i) {
    acc += p;
    p *= q;
  }
  return acc;
}

Scalar q_bracket_neg(long x, const Context& ctx) {
  require_nonneg(x, "q_bracket_neg: x");
  Scalar minus_q = -ctx.q();
  return (ctx.one() - minus_q.pow(x)) / (ctx.one() + ctx.q());
}

Scalar q_factorial(long n, const Context& ctx) {
  require_nonneg(n, "q_factorial: n");
  Scalar acc = ctx.one();
  for (long i = 2; i <= n; ++i) acc *= q_int(i, ctx);
  return acc;
}

std::vector<std::vector<Scalar>> gauss_binom_table(long n_max, long k_max, const Context& ctx,
                                                   BinomRecursion form) {
  require_nonneg(n_max, "gauss_binom_table: n_max");
  require_nonneg(k_max, "gauss_binom_table: k_max");
  std::vector<std::vector<Scalar>> t(static_cast<std::size_t>(n_max + 1),
                                     std::vector<Scalar>(static_cast<std::size_t>(k_max + 1),
                                                         ctx.zero()));
  t[0][0] = ctx.one();
  for (long n = 0; n < n_max; ++n) {
    auto& next = t[n + 1];
    const auto& cur = t[n];
    next[0] = ctx.one();
    for (long k = 1; k <= k_max && k <= n + 1; ++k) {
      if (form == BinomRecursion::Lower) {
        next[k] = cur[k - 1] + ctx.q_pow(k) * cur[k];
      } else {
        next[k] = ctx.q_pow(n + 1 - k) * cur[k - 1] + cur[k];
      }
    }
  }
  return t;
}

Scalar gauss_binom(long n, long k, const Context& ctx, BinomRecursion form) {
  require_nonneg(n, "gauss_binom: n");
  if (k < 0 || k > n) return ctx.zero();
  // symmetric, so recurse on the smaller of k and n - k
  long kk = std::min(k, n - k);
  return gauss_binom_table(n, kk, ctx, form)[n][kk];
}

Scalar gauss_binom_quotient(long n, long k, const Context& ctx) {
  require_nonneg(n, "gauss_binom_quotient: n");
  if (k < 0 || k > n) return ctx.zero();
  return q_factorial(n, ctx) / (q_factorial(n - k, ctx) * q_factorial(k, ctx));
}

QPoly gauss_binom_compositions(long n, long k) {
  if (k < 0 || k > n) throw std::invalid_argument("gauss_binom_compositions: need 0 <= k <= n");
  std::vector<Rat> coeffs;
  add_compositions(n - k, 0, k, 0, coeffs);
  return QPoly(std::move(coeffs));
}

Scalar pochhammer_q(const Scalar& b, long n, long ratio_exponent, const Context& ctx) {
  require_nonneg(n, "pochhammer_q: n");
  Scalar acc = ctx.one();
  for (long i = 1; i <= n; ++i) acc *= ctx.one() - b * ctx.q_pow(ratio_exponent * (i - 1));
  return acc;
}

std::vector<Scalar> pochhammer_expand(long n, const Context& ctx) {
  require_nonneg(n, "pochhammer_expand: n");
  std::vector<Scalar> poly{ctx.one()};
  for (long i = 1; i <= n; ++i) {
    // multiply by (1 - q^{i-1} b)
    Scalar f = ctx.q_pow(i - 1);
    std::vector<Scalar> next(poly.size() + 1, ctx.zero());
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] -= f * poly[j];
    }
    poly = std::move(next);
  }
  return poly;
}

Scalar inv_pochhammer_coeff(long n, long k, const Context& ctx) {
  if (n < 1) throw std::invalid_argument("inv_pochhammer_coeff: n must be >= 1");
  require_nonneg(k, "inv_pochhammer_coeff: k");
  return gauss_binom(n + k - 1, k, ctx);
}

std::vector<Scalar> inv_pochhammer_coeffs(long n, long k_max, const Context& ctx) {
  if (n < 1) throw std::invalid_argument("inv_pochhammer_coeffs: n must be >= 1");
  require_nonneg(k_max, "inv_pochhammer_coeffs: k_max");
  // C(n+k-1, k) = C(n+k-1, n-1): the table only needs n columns
  auto t = gauss_binom_table(n + k_max - 1, n - 1, ctx);
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(k_max + 1));
  for (long k = 0; k <= k_max; ++k) out.push_back(t[n + k - 1][n - 1]);
  return out;
}

}  // namespace qgen
