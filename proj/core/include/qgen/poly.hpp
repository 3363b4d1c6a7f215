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
#include <span>
#include <utility>
#include <vector>

#include "qgen/error.hpp"
#include "qgen/rat.hpp"

namespace qgen {

struct QVar {};
struct XVar {};

/// Dense univariate polynomial over Rat. Coefficient i multiplies var^i.
/// The tag keeps polynomials in q and in x from mixing.
template <class Var>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rat c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  Polynomial(long c) : Polynomial(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

  /// The indeterminate raised to e.
  static Polynomial monomial(std::size_t e, Rat c = Rat(1)) {
    std::vector<Rat> v(e + 1);
    v[e] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial var() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::span<const Rat> coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat eval(const Rat& at) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial scaled(const Rat& s) const {
    if (s.is_zero()) return {};
    Polynomial r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
  }
  Polynomial pow(unsigned e) const {
    Polynomial base = *this, acc(1);
    while (e) {
      if (e & 1U) acc *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return acc;
  }
  /// p(var + s), by Horner on the shifted variable.
  Polynomial shifted(const Rat& s) const {
    Polynomial acc;
    Polynomial lin(std::vector<Rat>{s, Rat(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Polynomial(*it);
    return acc;
  }

  /// Euclidean division; returns {quotient, remainder}.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw VanishingDenominator("polynomial division by zero");
    Polynomial rem = a;
    if (rem.degree() < b.degree()) return {Polynomial{}, std::move(rem)};
    std::vector<Rat> quot(static_cast<std::size_t>(rem.degree() - b.degree() + 1));
    const Rat lead_inv = Rat(1) / b.leading();
    const std::size_t bd = b.c_.size() - 1;
    for (std::size_t top = rem.c_.size(); top-- > bd;) {
      Rat f = rem.c_[top] * lead_inv;
      if (f.is_zero()) continue;
      quot[top - bd] = f;
      for (std::size_t j = 0; j <= bd; ++j) rem.c_[top - bd + j] -= f * b.c_[j];
    }
    rem.normalize();
    return {Polynomial(std::move(quot)), std::move(rem)};
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    return scaled(Rat(1) / leading());
  }

  /// Monic greatest common divisor (zero only when both inputs are zero).
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

using QPoly = Polynomial<QVar>;
using XPoly = Polynomial<XVar>;

}  // namespace qgen
