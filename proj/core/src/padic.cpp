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

#include "qgen/padic.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "qgen/error.hpp"

namespace qgen {

namespace {

Rat q_bracket(long n, const Rat& q) {
  if (q == Rat(1)) return Rat(n);
  return (Rat(1) - q.pow(n)) / (Rat(1) - q);
}

Rat neg_q_bracket(long n, const Rat& q) {
  if (q == Rat(-1)) throw VanishingDenominator("[x]_{-q} is undefined at q = -1");
  return (Rat(1) - (-q).pow(n)) / (Rat(1) + q);
}

// [x0 + s]_q^m for s = 0..s_max
std::vector<Rat> bracket_powers(long x0, long s_max, long m, const Rat& q) {
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(s_max + 1));
  Rat b = q_bracket(x0, q);
  for (long s = 0; s <= s_max; ++s) {
    out.push_back(b.pow(m));
    b = Rat(1) + q * b;
  }
  return out;
}

std::vector<Rat> geometric_powers(const Rat& ratio, long count) {
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(count));
  Rat p(1);
  for (long i = 0; i < count; ++i) {
    out.push_back(p);
    p *= ratio;
  }
  return out;
}

// Per-variable geometric ratio of the (-q)^x-weighted integrand:
// -w q^{h-j+1} for variable j of a q-bracket monomial, -w q for a classical one.
std::vector<Rat> variable_ratios(const IntegrandFamily& f, const Rat& q) {
  if (auto* c = std::get_if<ClassicalMonomial>(&f)) return {-(c->w * q)};
  const auto& b = std::get<QBracketMonomial>(f);
  std::vector<Rat> r;
  for (long j = 1; j <= b.k; ++j) r.push_back(-(b.w * q.pow(b.h - j + 1)));
  return r;
}

void validate(const IntegrandFamily& f) {
  if (auto* c = std::get_if<ClassicalMonomial>(&f)) {
    if (c->n < 0 || c->c < 0) throw std::invalid_argument("classical monomial: n, c must be >= 0");
    return;
  }
  const auto& b = std::get<QBracketMonomial>(f);
  if (b.m < 0 || b.k < 1 || b.x < 0) {
    throw std::invalid_argument("q-bracket monomial: need m >= 0, k >= 1, x >= 0");
  }
}

// Sum over the box [0, extent)^k of prod_j a_j[y_j] * g[sum y].
// Variables fixed in `lo_hi` give per-coordinate [lo, hi) ranges.
Rat box_sum(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& g,
            const std::vector<std::pair<long, long>>& ranges) {
  const std::size_t k = a.size();
  std::function<Rat(std::size_t, long)> rec = [&](std::size_t j, long s) -> Rat {
    if (j == k) return g[static_cast<std::size_t>(s)];
    Rat acc;
    for (long y = ranges[j].first; y < ranges[j].second; ++y) {
      Rat inner = rec(j + 1, s + y);
      if (!inner.is_zero()) acc += a[j][static_cast<std::size_t>(y)] * inner;
    }
    return acc;
  };
  return rec(0, 0);
}

long checked_power(long base, long e, std::size_t budget) {
  long out = 1;
  for (long i = 0; i < e; ++i) {
    if (out > static_cast<long>(budget) / base) {
      throw BudgetExceeded("p-adic level sum exceeds the term budget of " +
                           std::to_string(budget));
    }
    out *= base;
  }
  return out;
}

Rat level_sum_single(const std::function<Rat(long)>& g, const Rat& q, long P) {
  Rat acc, w(1);
  const Rat mq = -q;
  for (long y = 0; y < P; ++y) {
    acc += g(y) * w;
    w *= mq;
  }
  return acc / neg_q_bracket(P, q);
}

}  // namespace

void PadicParams::validate() const {
  if (p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  }
  if (N < 1) throw std::invalid_argument("level N must be >= 1");
}

long PadicParams::modulus() const {
  validate();
  long out = 1;
  for (long i = 0; i < N; ++i) {
    if (out > std::numeric_limits<long>::max() / static_cast<long>(p)) {
      throw BudgetExceeded("p^N does not fit a machine integer");
    }
    out *= static_cast<long>(p);
  }
  return out;
}

long variable_count(const IntegrandFamily& f) {
  if (auto* b = std::get_if<QBracketMonomial>(&f)) return b->k;
  return 1;
}

Rat evaluate(const IntegrandFamily& f, std::span<const long> xs, const Rat& q) {
  validate(f);
  if (static_cast<long>(xs.size()) != variable_count(f)) {
    throw std::invalid_argument("evaluate: wrong number of variables");
  }
  if (auto* c = std::get_if<ClassicalMonomial>(&f)) {
    return c->w.pow(xs[0]) * Rat(xs[0] + c->c).pow(c->n);
  }
  const auto& b = std::get<QBracketMonomial>(f);
  Rat weight(1);
  long s = b.x;
  for (long j = 1; j <= b.k; ++j) {
    long xj = xs[static_cast<std::size_t>(j - 1)];
    weight *= b.w.pow(xj) * q.pow((b.h - j) * xj);
    s += xj;
  }
  return weight * q_bracket(s, q).pow(b.m);
}

Rat measure_value(long a, const PadicParams& params, const Rat& q) {
  const long P = params.modulus();
  if (a < 0 || a >= P) {
    throw std::out_of_range("measure_value: a must lie in [0, p^N)");
  }
  return (-q).pow(a) / neg_q_bracket(P, q);
}

Rat fermionic_sum(const IntegrandFamily& f, const Rat& q, const PadicParams& params) {
  validate(f);
  const long P = params.modulus();
  const long k = variable_count(f);
  checked_power(P, k, params.term_budget);
  const Rat norm = neg_q_bracket(P, q);

  if (auto* c = std::get_if<ClassicalMonomial>(&f)) {
    auto g = [&](long y) { return c->w.pow(y) * Rat(y + c->c).pow(c->n); };
    return level_sum_single(g, q, P);
  }
  const auto& b = std::get<QBracketMonomial>(f);
  std::vector<std::vector<Rat>> a;
  for (const Rat& r : variable_ratios(f, q)) a.push_back(geometric_powers(r, P));
  auto g = bracket_powers(b.x, k * (P - 1), b.m, q);
  std::vector<std::pair<long, long>> ranges(static_cast<std::size_t>(k), {0L, P});
  return box_sum(a, g, ranges) / norm.pow(k);
}

bool valuation_verdict(std::span<const long> levels,
                       std::span<const std::optional<long>> valuations) {
  if (levels.empty() || levels.size() != valuations.size()) return false;
  for (std::size_t i = 1; i < valuations.size(); ++i) {
    const auto& prev = valuations[i - 1];
    const auto& cur = valuations[i];
    if (!prev) {
      if (cur) return false;
      continue;
    }
    if (cur && *cur < *prev) return false;
  }
  const long top = *std::max_element(levels.begin(), levels.end());
  const auto& last = valuations.back();
  return !last || *last >= top - 1;
}

ValuationReport padic_limit_check(const IntegrandFamily& f, const Rat& target, const Rat& q,
                                  unsigned long p, std::span<const long> levels,
                                  std::size_t term_budget) {
  auto v_q = valuation(q - Rat(1), p);
  if (v_q && *v_q < 1) {
    throw DomainError("p-adic convergence needs v_p(q - 1) >= 1, q = " + q.to_string());
  }
  const Rat& w = std::visit([](const auto& g) -> const Rat& { return g.w; }, f);
  auto v_w = valuation(w - Rat(1), p);
  if (v_w && *v_w < 1) {
    throw DomainError("p-adic convergence needs v_p(w - 1) >= 1, w = " + w.to_string());
  }
  ValuationReport report;
  for (long N : levels) {
    PadicParams params{p, N, term_budget};
    report.levels.push_back(N);
    report.valuations.push_back(valuation(fermionic_sum(f, q, params) - target, p));
  }
  report.verdict = valuation_verdict(report.levels, report.valuations);
  return report;
}

SeriesValue real_series(const IntegrandFamily& f, const Rat& q, const SeriesParams& sp) {
  validate(f);
  if (sp.M < 1) throw std::invalid_argument("series truncation M must be >= 1");
  const bool classical = std::holds_alternative<ClassicalMonomial>(f);
  const Rat aq = q.abs();
  if (q.is_zero() || aq > Rat(1) || (!classical && aq == Rat(1))) {
    throw DivergenceError("real series needs 0 < |q| < 1 (|q| <= 1 for classical monomials)");
  }
  const auto ratios = variable_ratios(f, q);
  for (const Rat& r : ratios) {
    if (r.abs() > Rat(1)) {
      throw DivergenceError("effective ratio " + r.to_string() + " exceeds 1 in absolute value");
    }
    if (r.abs() == Rat(1) && sp.mode == SummationMode::Direct) {
      throw DivergenceError("effective ratio on the unit circle; Direct summation oscillates, "
                            "use Cesaro1");
    }
  }

  const long k = static_cast<long>(ratios.size());
  const long M = sp.M;
  const Rat two_q = (Rat(1) + q).pow(k);

  std::vector<std::vector<Rat>> a;
  for (const Rat& r : ratios) a.push_back(geometric_powers(r, M));
  std::vector<Rat> g;
  if (auto* c = std::get_if<ClassicalMonomial>(&f)) {
    for (long y = 0; y < M; ++y) g.push_back(Rat(y + c->c).pow(c->n));
  } else {
    const auto& b = std::get<QBracketMonomial>(f);
    g = bracket_powers(b.x, k * (M - 1), b.m, q);
  }

  // S_T = sum over the box [0, T)^k, grown one shell at a time
  Rat partial, cesaro_acc;
  for (long T = 1; T <= M; ++T) {
    const long t = T - 1;
    for (long j0 = 0; j0 < k; ++j0) {
      std::vector<std::pair<long, long>> ranges;
      for (long j = 0; j < k; ++j) {
        if (j < j0) ranges.emplace_back(0, t);
        else if (j == j0) ranges.emplace_back(t, t + 1);
        else ranges.emplace_back(0, t + 1);
      }
      partial += box_sum(a, g, ranges);
    }
    if (sp.mode == SummationMode::Cesaro1) cesaro_acc += partial;
  }

  SeriesValue out;
  out.terms = 1;
  for (long j = 0; j < k; ++j) out.terms *= M;
  if (sp.mode == SummationMode::Cesaro1) {
    out.value = two_q * cesaro_acc / Rat(M);
    out.tail_bound = sp.cesaro_tolerance;
    return out;
  }
  out.value = two_q * partial;

  if (classical) {
    const auto& c = std::get<ClassicalMonomial>(f);
    // t_{y+1}/t_y <= rho for all y >= M
    const Rat base = Rat(M + c.c);
    const Rat rho = ratios[0].abs() * ((base + Rat(1)) / base).pow(c.n);
    if (rho >= Rat(1)) {
      throw DivergenceError("truncation M = " + std::to_string(M) +
                            " too small for a geometric tail bound");
    }
    const Rat first = two_q.abs() * ratios[0].abs().pow(M) * base.pow(c.n);
    out.tail_bound = first / (Rat(1) - rho);
    return out;
  }
  // |[n]_q| <= 1/(1-|q|); box complement of a product of geometric series
  const auto& b = std::get<QBracketMonomial>(f);
  const Rat bracket_max = (Rat(1) / (Rat(1) - aq)).pow(b.m);
  Rat full(1), box(1);
  for (const Rat& r : ratios) {
    const Rat ar = r.abs();
    full *= Rat(1) / (Rat(1) - ar);
    box *= (Rat(1) - ar.pow(M)) / (Rat(1) - ar);
  }
  out.tail_bound = two_q.abs() * bracket_max * (full - box);
  return out;
}

Rat shift_identity_residual(const IntegrandFamily& f, long n_shift, const Rat& q,
                            const PadicParams& params) {
  validate(f);
  if (variable_count(f) != 1) {
    throw std::invalid_argument("shift identity needs a single-variable integrand");
  }
  if (n_shift < 1) throw std::invalid_argument("n_shift must be >= 1");
  const long P = params.modulus();
  checked_power(P, 1, params.term_budget);
  auto g = [&](long y) {
    long pt[1] = {y};
    return evaluate(f, pt, q);
  };
  auto g_shift = [&](long y) { return g(y + n_shift); };
  const Rat sign = (n_shift % 2 == 0) ? Rat(1) : Rat(-1);
  Rat correction;
  for (long l = 0; l < n_shift; ++l) {
    const Rat s = ((n_shift - 1 - l) % 2 == 0) ? Rat(1) : Rat(-1);
    correction += s * q.pow(l) * g(l);
  }
  const Rat lhs = q.pow(n_shift) * level_sum_single(g_shift, q, P);
  const Rat rhs = sign * level_sum_single(g, q, P) + (Rat(1) + q) * correction;
  return lhs - rhs;
}

}  // namespace qgen
