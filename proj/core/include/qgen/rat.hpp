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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace qgen {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& num, const BigInt& den);
  Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

  /// Parses "num/den" or an integer literal. Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat abs() const;
  /// Integer power; negative exponents invert (throws on 0^negative).
  Rat pow(long e) const;

  /// "num/den", with "/den" omitted when the denominator is 1.
  std::string to_string() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
  }

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// p-adic valuation of a rational; std::nullopt stands for +infinity (zero).
std::optional<long> valuation(const Rat& r, unsigned long p);

/// Integer binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// Falling factorial (x)_r = x (x-1) ... (x-r+1).
BigInt falling_factorial(long x, long r);

BigInt factorial(long n);

bool is_prime(unsigned long n);

}  // namespace qgen
