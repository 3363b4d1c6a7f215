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
#include <vector>

#include "qgen/poly.hpp"
#include "qgen/rat.hpp"

namespace qgen {

/// Truncated exponential generating function sum_{n<=order} c_n t^n / n!.
/// Coefficients are stored without the factorial, so coeff(n) is c_n.
class ExpSeries {
 public:
  explicit ExpSeries(std::size_t order) : c_(order + 1) {}
  ExpSeries(std::size_t order, std::vector<Rat> coeffs);

  /// e^{a t}.
  static ExpSeries exp(std::size_t order, const Rat& a = Rat(1));
  /// The series of t itself (c_1 = 1).
  static ExpSeries t(std::size_t order);
  static ExpSeries constant(std::size_t order, const Rat& c);

  std::size_t order() const { return c_.size() - 1; }
  const Rat& coeff(std::size_t n) const { return c_.at(n); }

  ExpSeries& operator+=(const ExpSeries& o);
  ExpSeries& operator-=(const ExpSeries& o);
  ExpSeries operator*(const ExpSeries& o) const;
  ExpSeries scaled(const Rat& s) const;
  ExpSeries pow(unsigned e) const;
  /// 1/self; requires coeff(0) != 0.
  ExpSeries reciprocal() const;
  /// this / den; requires den.coeff(0) != 0.
  ExpSeries divided_by(const ExpSeries& den) const;

  friend ExpSeries operator+(ExpSeries a, const ExpSeries& b) { return a += b; }
  friend ExpSeries operator-(ExpSeries a, const ExpSeries& b) { return a -= b; }

 private:
  std::vector<Rat> c_;
};

/// n-th coefficient of s(t) e^{xt} as a polynomial in x:
/// sum_i C(n,i) s_i x^{n-i}.
XPoly times_exp_x(const ExpSeries& s, std::size_t n);

/// Euler polynomial E_n(x) from 2 e^{xt} / (e^t + 1).
XPoly euler_poly(long n);
/// E_n = E_n(0).
Rat euler_number(long n);

/// E_n^{(r)}(x) from (2/(e^t+1))^r e^{xt}.
XPoly higher_euler_poly(long n, long r);

/// G_n from 2t/(e^t+1).
Rat genocchi(long n);
/// G_n(x) from 2t e^{xt}/(e^t+1).
XPoly genocchi_poly(long n);

/// G_n^{(r)} from (2t/(e^t+1))^r.
Rat higher_genocchi(long n, long r);

/// B_n from t/(e^t - 1) (B_1 = -1/2).
Rat bernoulli(long n);

/// H_n(u) from (1-u)/(e^t - u). Throws DomainError for u = 1.
Rat frobenius_euler(long n, const Rat& u);
/// H_n(u, x) from (1-u) e^{xt}/(e^t - u).
XPoly frobenius_euler_poly(long n, const Rat& u);

/// E_n(w) from 2/(w e^t + 1), computed as 2/(w+1) H_n(-1/w).
/// Throws DomainError for w in {0, -1}.
Rat twisted_euler_classical(long n, const Rat& w);

}  // namespace qgen
