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

#include "qgen/qrat.hpp"

namespace qgen {

QRat::QRat(QPoly num, QPoly den) {
  if (den.is_zero()) throw VanishingDenominator("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (!den.is_constant()) {
    QPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = divmod(num, g).first;
      den = divmod(den, g).first;
    }
  }
  Rat lead = den.leading();
  num_ = num.scaled(Rat(1) / lead);
  den_ = den.scaled(Rat(1) / lead);
}

Rat QRat::eval(const Rat& q0) const {
  Rat d = den_.eval(q0);
  if (d.is_zero()) {
    throw VanishingDenominator("rational function has a pole at q = " + q0.to_string());
  }
  return num_.eval(q0) / d;
}

QRat operator+(const QRat& a, const QRat& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    // dens are the constant 1 after normalization
    return QRat(a.num_ + b.num_, QPoly(1), QRat::Reduced{});
  }
  if (a.den_ == b.den_) return QRat(a.num_ + b.num_, a.den_);
  return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
  if (a.is_zero() || b.is_zero()) return QRat();
  if (a.is_polynomial() && b.is_polynomial()) {
    return QRat(a.num_ * b.num_, QPoly(1), QRat::Reduced{});
  }
  return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat operator/(const QRat& a, const QRat& b) {
  if (b.is_zero()) throw VanishingDenominator("division by the zero rational function");
  return QRat(a.num_ * b.den_, a.den_ * b.num_);
}

QRat QRat::operator-() const { return QRat(-num_, den_, Reduced{}); }

QRat QRat::pow(long e) const {
  if (e < 0) return QRat(1) / pow(-e);
  return QRat(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)),
              Reduced{});
}

}  // namespace qgen
