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

#include "qgen/qgenocchi.hpp"

#include <stdexcept>
#include <string>

#include "detail.hpp"
#include "qgen/error.hpp"

namespace qgen {

Scalar qgenocchi(long n, const Context& ctx) { return qgenocchi_twisted(n, Rat(1), ctx); }

Scalar qgenocchi_moment(long n, const Context& ctx) {
  if (n < 0) throw std::invalid_argument("qgenocchi_moment: n must be >= 0");
  return qgenocchi(n + 1, ctx) / ctx.constant(Rat(n + 1));
}

Scalar qgenocchi_twisted(long n, const Rat& w, const Context& ctx) {
  if (n < 0) throw std::invalid_argument("qgenocchi: n must be >= 0");
  if (n == 0) return ctx.zero();
  const Scalar one = ctx.one();
  Scalar sum = ctx.zero();
  for (long l = 0; l < n; ++l) {
    Scalar den = one + ctx.constant(w) * ctx.q_pow(l + 1);
    if (den.is_zero()) {
      throw VanishingDenominator("denominator 1 + w q^" + std::to_string(l + 1) +
                                 " vanishes at l = " + std::to_string(l));
    }
    Rat c(binomial(n - 1, l));
    if (l % 2 == 1) c = -c;
    sum += ctx.constant(c) / den;
  }
  return ctx.constant(Rat(n)) * (one + ctx.q()) * sum / (one - ctx.q()).pow(n - 1);
}

Scalar qgenocchi_hk(const QGenocchiSpec& spec, const Context& ctx) {
  if (spec.n < 0) throw std::invalid_argument("qgenocchi_hk: n must be >= 0");
  if (spec.k < 1) throw std::invalid_argument("qgenocchi_hk: k must be >= 1");
  const Scalar one = ctx.one();
  Scalar sum = ctx.zero();
  for (long l = 0; l <= spec.n; ++l) {
    Scalar den = detail::shifted_product(spec.w, spec.h + l, spec.k, ctx,
                                         "l = " + std::to_string(l));
    Rat c(binomial(spec.n, l));
    if (l % 2 == 1) c = -c;
    sum += ctx.constant(c) / den;
  }
  const Rat scale(BigInt(factorial(spec.k) * binomial(spec.n + spec.k, spec.k)));
  return ctx.constant(scale) * (one + ctx.q()).pow(spec.k) * sum /
         (one - ctx.q()).pow(spec.n);
}

Scalar qgenocchi_hk_at(long index, long h, long k, const Rat& w, const Context& ctx) {
  if (index < 0) throw std::invalid_argument("qgenocchi_hk_at: index must be >= 0");
  if (k < 1) throw std::invalid_argument("qgenocchi_hk_at: k must be >= 1");
  // the t^k factor of the generating function kills every index below k
  if (index < k) return ctx.zero();
  return qgenocchi_hk(QGenocchiSpec{index - k, h, k, w}, ctx);
}

SeriesValue qgenocchi_hk_series(const QGenocchiSpec& spec, const Rat& q,
                                const SeriesParams& sp) {
  if (spec.n < 0) throw std::invalid_argument("qgenocchi_hk_series: n must be >= 0");
  if (spec.h != spec.k - 1) throw std::invalid_argument("series form needs h = k - 1");
  std::vector<Rat> brackets;
  Rat b;
  for (long m = 0; m < sp.M; ++m) {
    brackets.push_back(b.pow(spec.n));
    b = Rat(1) + q * b;
  }
  auto g = [&](long m) { return brackets[static_cast<std::size_t>(m)]; };
  const Rat g_bound = (Rat(1) / (Rat(1) - q)).pow(spec.n);
  SeriesValue out = detail::binomial_weighted_series(spec.k, spec.w, q, sp, g, g_bound);
  const Rat scale(BigInt(factorial(spec.k) * binomial(spec.n + spec.k, spec.k)));
  out.value *= scale;
  if (sp.mode == SummationMode::Direct) out.tail_bound *= scale;
  return out;
}

}  // namespace qgen
