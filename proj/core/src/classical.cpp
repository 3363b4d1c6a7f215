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

#include "qgen/classical.hpp"

#include <stdexcept>

#include "qgen/error.hpp"

namespace qgen {

namespace {

std::size_t index_of(long n) {
  if (n < 0) throw std::invalid_argument("sequence index must be nonnegative");
  return static_cast<std::size_t>(n);
}

// 2/(e^t + 1) through order n.
ExpSeries euler_gf(std::size_t n) {
  return ExpSeries::constant(n, Rat(2)).divided_by(ExpSeries::exp(n) + ExpSeries::constant(n, 1));
}

// 2t/(e^t + 1) through order n.
ExpSeries genocchi_gf(std::size_t n) {
  return ExpSeries::t(n).scaled(Rat(2)).divided_by(ExpSeries::exp(n) +
                                                   ExpSeries::constant(n, 1));
}

ExpSeries frobenius_gf(std::size_t n, const Rat& u) {
  if (u == Rat(1)) throw DomainError("Frobenius-Euler numbers are undefined at u = 1");
  return ExpSeries::constant(n, Rat(1) - u).divided_by(ExpSeries::exp(n) -
                                                       ExpSeries::constant(n, u));
}

}  // namespace

ExpSeries::ExpSeries(std::size_t order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

ExpSeries ExpSeries::exp(std::size_t order, const Rat& a) {
  ExpSeries s(order);
  Rat p(1);
  for (auto& c : s.c_) {
    c = p;
    p *= a;
  }
  return s;
}

ExpSeries ExpSeries::t(std::size_t order) {
  ExpSeries s(order);
  if (order >= 1) s.c_[1] = Rat(1);
  return s;
}

ExpSeries ExpSeries::constant(std::size_t order, const Rat& c) {
  ExpSeries s(order);
  s.c_[0] = c;
  return s;
}

ExpSeries& ExpSeries::operator+=(const ExpSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("ExpSeries order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

ExpSeries& ExpSeries::operator-=(const ExpSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("ExpSeries order mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

ExpSeries ExpSeries::operator*(const ExpSeries& o) const {
  if (o.order() != order()) throw std::invalid_argument("ExpSeries order mismatch");
  ExpSeries out(order());
  for (std::size_t n = 0; n < c_.size(); ++n) {
    Rat acc;
    for (std::size_t i = 0; i <= n; ++i) {
      if (c_[i].is_zero() || o.c_[n - i].is_zero()) continue;
      acc += Rat(binomial(static_cast<long>(n), static_cast<long>(i))) * c_[i] * o.c_[n - i];
    }
    out.c_[n] = acc;
  }
  return out;
}

ExpSeries ExpSeries::scaled(const Rat& s) const {
  ExpSeries out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

ExpSeries ExpSeries::pow(unsigned e) const {
  ExpSeries acc = constant(order(), Rat(1));
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

ExpSeries ExpSeries::reciprocal() const { return constant(order(), Rat(1)).divided_by(*this); }

ExpSeries ExpSeries::divided_by(const ExpSeries& den) const {
  if (den.order() != order()) throw std::invalid_argument("ExpSeries order mismatch");
  if (den.c_[0].is_zero()) throw VanishingDenominator("series division by a series with zero constant term");
  // q = a/b  <=>  a_n = sum_i C(n,i) b_i q_{n-i}
  ExpSeries q(order());
  const Rat inv0 = Rat(1) / den.c_[0];
  for (std::size_t n = 0; n < c_.size(); ++n) {
    Rat acc = c_[n];
    for (std::size_t i = 1; i <= n; ++i) {
      if (den.c_[i].is_zero()) continue;
      acc -= Rat(binomial(static_cast<long>(n), static_cast<long>(i))) * den.c_[i] * q.c_[n - i];
    }
    q.c_[n] = acc * inv0;
  }
  return q;
}

XPoly times_exp_x(const ExpSeries& s, std::size_t n) {
  std::vector<Rat> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    coeffs[n - i] = Rat(binomial(static_cast<long>(n), static_cast<long>(i))) * s.coeff(i);
  }
  return XPoly(std::move(coeffs));
}

XPoly euler_poly(long n) {
  auto i = index_of(n);
  return times_exp_x(euler_gf(i), i);
}

Rat euler_number(long n) {
  auto i = index_of(n);
  return euler_gf(i).coeff(i);
}

XPoly higher_euler_poly(long n, long r) {
  if (r < 1) throw std::invalid_argument("higher_euler_poly: order r must be >= 1");
  auto i = index_of(n);
  return times_exp_x(euler_gf(i).pow(static_cast<unsigned>(r)), i);
}

Rat genocchi(long n) {
  auto i = index_of(n);
  return genocchi_gf(i).coeff(i);
}

XPoly genocchi_poly(long n) {
  auto i = index_of(n);
  return times_exp_x(genocchi_gf(i), i);
}

Rat higher_genocchi(long n, long r) {
  if (r < 1) throw std::invalid_argument("higher_genocchi: order r must be >= 1");
  auto i = index_of(n);
  return genocchi_gf(i).pow(static_cast<unsigned>(r)).coeff(i);
}

Rat bernoulli(long n) {
  auto i = index_of(n);
  // (e^t - 1)/t = sum t^n/(n+1)!, i.e. EGF coefficients 1/(n+1)
  std::vector<Rat> c(i + 1);
  for (std::size_t j = 0; j <= i; ++j) c[j] = Rat(1, static_cast<long>(j + 1));
  return ExpSeries(i, std::move(c)).reciprocal().coeff(i);
}

Rat frobenius_euler(long n, const Rat& u) {
  auto i = index_of(n);
  return frobenius_gf(i, u).coeff(i);
}

XPoly frobenius_euler_poly(long n, const Rat& u) {
  auto i = index_of(n);
  return times_exp_x(frobenius_gf(i, u), i);
}

Rat twisted_euler_classical(long n, const Rat& w) {
  if (w.is_zero() || w == Rat(-1)) {
    throw DomainError("twisted Euler numbers need w not in {0, -1}, got " + w.to_string());
  }
  return Rat(2) / (w + Rat(1)) * frobenius_euler(n, -(Rat(1) / w));
}

}  // namespace qgen
