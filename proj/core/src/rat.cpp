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

#include "qgen/rat.hpp"

#include <stdexcept>

#include "qgen/error.hpp"

namespace qgen {

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw VanishingDenominator("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer in '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') {
        throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
      }
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rat(parse_int(text.substr(0, slash)), den);
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(v_))); }

Rat Rat::operator-() const { return Rat(mpq_class(-v_)); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw VanishingDenominator("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw VanishingDenominator("zero raised to a negative power");
    return Rat(1) / pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  mpq_class r(n, d);
  return Rat(std::move(r));
}

std::string Rat::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::optional<long> valuation(const Rat& r, unsigned long p) {
  if (r.is_zero()) return std::nullopt;
  mpz_class pp(p);
  auto count = [&](mpz_class x) {
    mpz_class rem;
    return static_cast<long>(mpz_remove(rem.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
  };
  return count(r.numerator()) - count(r.denominator());
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt falling_factorial(long x, long r) {
  BigInt out = 1;
  for (long i = 0; i < r; ++i) out *= (x - i);
  return out;
}

BigInt factorial(long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace qgen
