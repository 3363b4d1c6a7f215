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

#include "qgen/qeuler.hpp"

#include <stdexcept>
#include <string>

#include "detail.hpp"
#include "qgen/error.hpp"

namespace qgen {

namespace {

void validate(const QEulerSpec& s) {
  if (s.m < 0) throw std::invalid_argument("qeuler: m must be >= 0");
  if (s.k < 1) throw std::invalid_argument("qeuler: k must be >= 1");
  if (s.x < 0) throw std::invalid_argument("qeuler: x must be >= 0");
}

}  // namespace

Scalar qeuler_hk(const QEulerSpec& spec, const Context& ctx) {
  validate(spec);
  const Scalar one = ctx.one();
  Scalar sum = ctx.zero();
  for (long j = 0; j <= spec.m; ++j) {
    Scalar den = detail::shifted_product(spec.w, j + spec.h, spec.k, ctx,
                                         "j = " + std::to_string(j));
    Rat c(binomial(spec.m, j));
    if (j % 2 == 1) c = -c;
    sum += ctx.term(c, spec.x * j) / den;
  }
  Scalar two = one + ctx.q();
  return two.pow(spec.k) * sum / (one - ctx.q()).pow(spec.m);
}

SeriesValue qeuler_hk_series(const QEulerSpec& spec, const Rat& q, const SeriesParams& sp) {
  if (spec.w != Rat(1)) {
    throw std::invalid_argument("qeuler_hk_series is the untwisted series; use the twisted form");
  }
  if (sp.mode != SummationMode::Cesaro1) {
    throw DivergenceError("the h = k-1 series is a boundary alternating series; "
                          "Direct summation rejected, use Cesaro1");
  }
  return qeuler_twisted_hk_series(spec, q, sp);
}

SeriesValue qeuler_twisted_hk_series(const QEulerSpec& spec, const Rat& q,
                                     const SeriesParams& sp) {
  validate(spec);
  if (spec.h != spec.k - 1) throw std::invalid_argument("series form needs h = k - 1");
  // [n + x]_q^m, built incrementally by the caller-facing closure
  std::vector<Rat> brackets;
  Rat b = (Rat(1) - q.pow(spec.x)) / (Rat(1) - q);
  brackets.reserve(static_cast<std::size_t>(sp.M));
  for (long n = 0; n < sp.M; ++n) {
    brackets.push_back(b.pow(spec.m));
    b = Rat(1) + q * b;
  }
  auto g = [&](long n) { return brackets[static_cast<std::size_t>(n)]; };
  const Rat g_bound = (Rat(1) / (Rat(1) - q)).pow(spec.m);
  return detail::binomial_weighted_series(spec.k, spec.w, q, sp, g, g_bound);
}

Scalar qeuler_twisted(long n, const Rat& w, const Context& ctx) {
  if (n < 0) throw std::invalid_argument("qeuler_twisted: n must be >= 0");
  const Scalar one = ctx.one();
  Scalar sum = ctx.zero();
  for (long j = 0; j <= n; ++j) {
    Scalar den = one + ctx.constant(w) * ctx.q_pow(j + 1);
    if (den.is_zero()) {
      throw VanishingDenominator("denominator 1 + w q^" + std::to_string(j + 1) +
                                 " vanishes at j = " + std::to_string(j));
    }
    Rat c(binomial(n, j));
    if (j % 2 == 1) c = -c;
    sum += ctx.constant(c) / den;
  }
  return (one + ctx.q()) * sum / (one - ctx.q()).pow(n);
}

}  // namespace qgen
