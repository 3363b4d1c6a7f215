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
#include "qgen/qeuler.hpp"
#include "qgen/qgenocchi.hpp"

namespace qgen {

namespace {

// sum_{i<terms} (a t)^i / i!
Rat truncated_exp(const Rat& at, long terms) {
  Rat acc, p(1);
  for (long i = 0; i < terms; ++i) {
    acc += p;
    p = p * at / Rat(i + 1);
  }
  return acc;
}

std::vector<Rat> bracket_values(long start, long count, const Rat& q) {
  std::vector<Rat> out;
  Rat b = (Rat(1) - q.pow(start)) / (Rat(1) - q);
  for (long n = 0; n < count; ++n) {
    out.push_back(b);
    b = Rat(1) + q * b;
  }
  return out;
}

}  // namespace

GfValue gf_eval(GfKind kind, long k, long x, const Rat& w, const Rat& q, const Rat& t,
                const SeriesParams& sp, long t_terms) {
  if (k < 1) throw std::invalid_argument("gf_eval: k must be >= 1");
  if (t_terms < 1) throw std::invalid_argument("gf_eval: need at least one t term");
  if (x < 0) throw std::invalid_argument("gf_eval: x must be >= 0");
  const Context ctx = Context::exact(q);
  const Rat twist = (kind == GfKind::h_qk) ? Rat(1) : w;
  const long shift = (kind == GfKind::F_qk) ? x : 0;

  const auto brackets = bracket_values(shift, sp.M, q);
  auto g = [&](long n) { return truncated_exp(brackets[static_cast<std::size_t>(n)] * t, t_terms); };
  const Rat g_bound = truncated_exp(t.abs() / (Rat(1) - q), t_terms);
  SeriesValue series = detail::binomial_weighted_series(k, twist, q, sp, g, g_bound);

  GfValue out;
  Rat t_pow(1), fact(1);
  if (kind == GfKind::F_qk) {
    out.lhs = series.value;
    for (long m = 0; m < t_terms; ++m) {
      out.rhs_coeffs.push_back(qeuler_hk(QEulerSpec{m, k - 1, k, x, twist}, ctx).exact());
    }
  } else {
    out.lhs = t.pow(k) * series.value;
    for (long n = 0; n < t_terms + k; ++n) {
      out.rhs_coeffs.push_back(qgenocchi_hk_at(n, k - 1, k, twist, ctx).exact());
    }
  }
  for (std::size_t n = 0; n < out.rhs_coeffs.size(); ++n) {
    if (n > 0) {
      t_pow *= t;
      fact *= Rat(static_cast<long>(n));
    }
    out.rhs += out.rhs_coeffs[n] * t_pow / fact;
  }
  return out;
}

}  // namespace qgen
