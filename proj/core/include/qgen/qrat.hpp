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

#include <ostream>

#include "qgen/poly.hpp"

namespace qgen {

/// Reduced rational function num/den in q: gcd(num, den) = 1 and den monic.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(QPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(Rat c) : QRat(QPoly(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  QRat(long c) : QRat(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  QRat(QPoly num, QPoly den);

  static QRat q() { return QRat(QPoly::var()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// Exact value at q0. Throws VanishingDenominator when den(q0) = 0; because
  /// the fraction is reduced this is also the exact limit q -> q0 when it exists.
  Rat eval(const Rat& q0) const;

  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat& operator/=(const QRat& o) { return *this = *this / o; }

  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat operator-() const;
  QRat pow(long e) const;

  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Reduced {};
  QRat(QPoly num, QPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  QPoly num_;
  QPoly den_;
};

}  // namespace qgen
