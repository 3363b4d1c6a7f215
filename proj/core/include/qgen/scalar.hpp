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

#include <string>
#include <variant>

#include "qgen/qrat.hpp"
#include "qgen/rat.hpp"

namespace qgen {

/// A value either at a fixed rational q (Exact) or as an element of Q(q)
/// (Symbolic). Binary operations require both operands in the same variant.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Rat v) : v_(std::move(v)) {}
  explicit Scalar(QRat v) : v_(std::move(v)) {}

  bool is_symbolic() const { return std::holds_alternative<QRat>(v_); }
  bool is_zero() const;

  /// Throws std::logic_error when the variant does not match.
  const Rat& exact() const;
  const QRat& symbolic() const;

  /// Symbolic values are evaluated (exact limit); Exact values are returned as is.
  Rat eval(const Rat& q0) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;
  Scalar pow(long e) const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

 private:
  std::variant<Rat, QRat> v_;
};

/// Evaluation domain for the q-families: either a fixed rational q or the
/// symbolic indeterminate.
class Context {
 public:
  /// Throws DomainError for q in {0, 1, -1}.
  static Context exact(Rat q);
  static Context symbolic() { return Context(); }

  bool is_symbolic() const { return symbolic_; }
  /// The fixed q of an Exact context.
  const Rat& q_value() const { return q_; }

  Scalar q() const;
  Scalar constant(const Rat& c) const;
  Scalar zero() const { return constant(Rat(0)); }
  Scalar one() const { return constant(Rat(1)); }
  /// q^e for any integer e, exact in both domains.
  Scalar q_pow(long e) const;
  /// c * q^e.
  Scalar term(const Rat& c, long e) const { return constant(c) * q_pow(e); }

 private:
  Context() = default;
  bool symbolic_ = true;
  Rat q_;
};

}  // namespace qgen
