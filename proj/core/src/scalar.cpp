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

#include "qgen/scalar.hpp"

#include <stdexcept>

#include "qgen/error.hpp"

namespace qgen {

namespace {

template <class F>
void combine(std::variant<Rat, QRat>& lhs, const std::variant<Rat, QRat>& rhs, F&& f) {
  if (lhs.index() != rhs.index()) {
    throw std::logic_error("Scalar: mixing Exact and Symbolic values");
  }
  if (auto* l = std::get_if<Rat>(&lhs)) {
    f(*l, std::get<Rat>(rhs));
  } else {
    f(std::get<QRat>(lhs), std::get<QRat>(rhs));
  }
}

}  // namespace

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, v_);
}

const Rat& Scalar::exact() const {
  if (auto* r = std::get_if<Rat>(&v_)) return *r;
  throw std::logic_error("Scalar: expected an Exact value");
}

const QRat& Scalar::symbolic() const {
  if (auto* r = std::get_if<QRat>(&v_)) return *r;
  throw std::logic_error("Scalar: expected a Symbolic value");
}

Rat Scalar::eval(const Rat& q0) const {
  if (auto* r = std::get_if<Rat>(&v_)) return *r;
  return std::get<QRat>(v_).eval(q0);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  combine(v_, o.v_, [](auto& a, const auto& b) { a += b; });
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  combine(v_, o.v_, [](auto& a, const auto& b) { a -= b; });
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  combine(v_, o.v_, [](auto& a, const auto& b) { a *= b; });
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  combine(v_, o.v_, [](auto& a, const auto& b) { a /= b; });
  return *this;
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(-v); }, v_);
}

Scalar Scalar::pow(long e) const {
  return std::visit([e](const auto& v) { return Scalar(v.pow(e)); }, v_);
}

Context Context::exact(Rat q) {
  if (q.is_zero() || q == Rat(1) || q == Rat(-1)) {
    throw DomainError("exact evaluation requires q not in {0, 1, -1}, got " + q.to_string());
  }
  Context c;
  c.symbolic_ = false;
  c.q_ = std::move(q);
  return c;
}

Scalar Context::q() const { return symbolic_ ? Scalar(QRat::q()) : Scalar(q_); }

Scalar Context::constant(const Rat& c) const { return symbolic_ ? Scalar(QRat(c)) : Scalar(c); }

Scalar Context::q_pow(long e) const {
  if (!symbolic_) return Scalar(q_.pow(e));
  if (e >= 0) return Scalar(QRat(QPoly::monomial(static_cast<std::size_t>(e))));
  return Scalar(QRat(QPoly(1), QPoly::monomial(static_cast<std::size_t>(-e))));
}

}  // namespace qgen
