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

#include <stdexcept>

#include "detail.hpp"
#include "qgen/error.hpp"
#include "qgen/qcore.hpp"

namespace qgen::detail {

Scalar shifted_product(const Rat& w, long top, long k, const Context& ctx,
                       const std::string& label) {
  Scalar acc = ctx.one();
  for (long l = 0; l < k; ++l) {
    Scalar factor = ctx.one() + ctx.constant(w) * ctx.q_pow(top - l);
    if (factor.is_zero()) {
      throw VanishingDenominator("denominator factor 1 + w q^" + std::to_string(top - l) +
                                 " vanishes at " + label + ", l = " + std::to_string(l));
    }
    acc *= factor;
  }
  return acc;
}

SeriesValue binomial_weighted_series(long k, const Rat& w, const Rat& q, const SeriesParams& sp,
                                     const std::function<Rat(long)>& g, const Rat& g_bound) {
  if (k < 1) throw std::invalid_argument("order k must be >= 1");
  if (sp.M < 1) throw std::invalid_argument("series truncation M must be >= 1");
  if (!(Rat(0) < q && q < Rat(1))) throw DivergenceError("series evaluation needs 0 < q < 1");
  const Rat aw = w.abs();
  if (aw > Rat(1)) throw DivergenceError("series diverges for |w| > 1, w = " + w.to_string());
  if (aw == Rat(1) && sp.mode == SummationMode::Direct) {
    throw DivergenceError("boundary alternating series (|w| = 1): terms do not tend to zero, "
                          "Direct summation rejected; use Cesaro1");
  }

  const Context ctx = Context::exact(q);
  const auto weights = inv_pochhammer_coeffs(k, sp.M - 1, ctx);
  const Rat two_k = (Rat(1) + q).pow(k);
  const Rat ratio = -w;

  Rat partial, cesaro_acc, sign(1);
  for (long n = 0; n < sp.M; ++n) {
    partial += weights[static_cast<std::size_t>(n)].exact() * sign * g(n);
    sign *= ratio;
    cesaro_acc += partial;
  }

  SeriesValue out;
  out.terms = sp.M;
  if (sp.mode == SummationMode::Cesaro1) {
    out.value = two_k * cesaro_acc / Rat(sp.M);
    out.tail_bound = sp.cesaro_tolerance;
    return out;
  }
  out.value = two_k * partial;
  // C(n+k-1, n)_q <= 1/(q;q)_{k-1} for 0 < q < 1
  Rat weight_bound(1);
  for (long i = 1; i < k; ++i) weight_bound /= Rat(1) - q.pow(i);
  out.tail_bound = two_k * weight_bound * g_bound * aw.pow(sp.M) / (Rat(1) - aw);
  return out;
}

}  // namespace qgen::detail
