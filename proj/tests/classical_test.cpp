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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qgen/classical.hpp"
#include "qgen/error.hpp"

namespace qgen {
namespace {

XPoly xpoly(std::vector<Rat> c) { return XPoly(std::move(c)); }

TEST(Euler, Examples) {
  EXPECT_EQ(euler_number(0), Rat(1));
  EXPECT_EQ(euler_number(1), Rat(-1, 2));
  EXPECT_EQ(euler_number(3), Rat(1, 4));
  EXPECT_EQ(euler_poly(1), xpoly({Rat(-1, 2), Rat(1)}));
  EXPECT_EQ(euler_poly(5).leading(), Rat(1));
  EXPECT_EQ(euler_poly(5).degree(), 5);
}

TEST(Euler, MatchesRecurrenceOracle) {
  auto e = oracle::euler_numbers(20);
  for (long n = 0; n <= 20; ++n) EXPECT_EQ(euler_number(n), e[n]) << n;
}

TEST(Euler, Complementarity) {
  for (long n = 0; n <= 15; ++n) {
    XPoly e = euler_poly(n);
    EXPECT_EQ(e.shifted(Rat(1)) + e, XPoly::monomial(n, Rat(2))) << n;
  }
}

TEST(HigherEuler, Examples) {
  for (long r = 1; r <= 5; ++r) {
    EXPECT_EQ(higher_euler_poly(0, r), XPoly(1));
    EXPECT_EQ(higher_euler_poly(1, r).eval(Rat(0)), Rat(-r, 2));
  }
  EXPECT_EQ(higher_euler_poly(2, 2).eval(Rat(0)), Rat(1, 2));
  for (long n = 0; n <= 12; ++n) EXPECT_EQ(higher_euler_poly(n, 1), euler_poly(n));
  EXPECT_THROW(higher_euler_poly(2, 0), std::invalid_argument);
}

TEST(Genocchi, Examples) {
  EXPECT_EQ(genocchi(0), Rat(0));
  EXPECT_EQ(genocchi(1), Rat(1));
  EXPECT_EQ(genocchi(2), Rat(-1));
  EXPECT_EQ(genocchi(3), Rat(0));
  EXPECT_EQ(genocchi(4), Rat(1));
  EXPECT_EQ(genocchi(5), Rat(0));
  EXPECT_EQ(genocchi(6), Rat(-3));
  EXPECT_EQ(genocchi(8), Rat(17));
  for (long n = 3; n <= 19; n += 2) EXPECT_TRUE(genocchi(n).is_zero()) << n;
}

TEST(Genocchi, EulerAndBernoulliRelations) {
  auto e = oracle::euler_numbers(20);
  auto b = oracle::bernoulli_numbers(20);
  for (long n = 1; n <= 20; ++n) {
    EXPECT_EQ(genocchi(n), Rat(n) * euler_number(n - 1)) << n;
    EXPECT_EQ(genocchi(n), Rat(n) * e[n - 1]) << n;
  }
  for (long n = 2; n <= 20; n += 2) {
    EXPECT_EQ(genocchi(n), Rat(2) * (Rat(1) - Rat(2).pow(n)) * bernoulli(n)) << n;
    EXPECT_EQ(bernoulli(n), b[n]) << n;
  }
  // G_{n+1}(x)/(n+1) = E_n(x)
  for (long n = 0; n <= 10; ++n) {
    EXPECT_EQ(genocchi_poly(n + 1).scaled(Rat(1, n + 1)), euler_poly(n)) << n;
  }
}

TEST(Bernoulli, Examples) {
  EXPECT_EQ(bernoulli(0), Rat(1));
  EXPECT_EQ(bernoulli(1), Rat(-1, 2));
  EXPECT_EQ(bernoulli(2), Rat(1, 6));
  EXPECT_EQ(Rat(2) * (Rat(1) - Rat(64)) * bernoulli(6), Rat(-3));
}

TEST(HigherGenocchi, VanishingPrefixAndAnchors) {
  for (long r = 1; r <= 5; ++r) {
    for (long j = 0; j < r; ++j) EXPECT_TRUE(higher_genocchi(j, r).is_zero()) << j << "," << r;
    EXPECT_EQ(higher_genocchi(r, r), Rat(factorial(r))) << r;
  }
  EXPECT_EQ(higher_genocchi(4, 2), Rat(6));
  EXPECT_EQ(Rat(12) * higher_euler_poly(2, 2).eval(Rat(0)), Rat(6));
  for (long n = 0; n <= 12; ++n) EXPECT_EQ(higher_genocchi(n, 1), genocchi(n));
}

TEST(HigherGenocchi, FallingFactorialTheorem) {
  for (long r = 1; r <= 4; ++r) {
    for (long n = 0; n <= 10; ++n) {
      Rat lhs = higher_genocchi(n + r, r);
      Rat rhs = Rat(falling_factorial(n + r, r)) * higher_euler_poly(n, r).eval(Rat(0));
      EXPECT_EQ(lhs, rhs) << n << "," << r;
      EXPECT_EQ(falling_factorial(n + r, r), factorial(r) * binomial(n + r, r));
    }
  }
}

TEST(FrobeniusEuler, Examples) {
  for (Rat u : {Rat(2), Rat(-2), Rat(1, 3), Rat(5, 7)}) {
    EXPECT_EQ(frobenius_euler(0, u), Rat(1));
    EXPECT_EQ(frobenius_euler(1, u), Rat(1) / (u - Rat(1)));
  }
  for (long n = 0; n <= 12; ++n) EXPECT_EQ(frobenius_euler(n, Rat(-1)), euler_number(n));
  EXPECT_THROW(frobenius_euler(3, Rat(1)), DomainError);
}

TEST(FrobeniusEuler, PolynomialAtZero) {
  for (Rat u : {Rat(2), Rat(-2), Rat(1, 3)}) {
    for (long n = 0; n <= 10; ++n) {
      EXPECT_EQ(frobenius_euler_poly(n, u).eval(Rat(0)), frobenius_euler(n, u));
      EXPECT_EQ(frobenius_euler_poly(n, u).degree(), n);
    }
  }
}

TEST(TwistedEulerClassical, Examples) {
  for (long n = 0; n <= 10; ++n) EXPECT_EQ(twisted_euler_classical(n, Rat(1)), euler_number(n));
  EXPECT_EQ(twisted_euler_classical(0, Rat(3, 5)), Rat(2) / Rat(8, 5));
  EXPECT_EQ(twisted_euler_classical(1, Rat(1, 2)), Rat(-4, 9));
  EXPECT_THROW(twisted_euler_classical(1, Rat(-1)), DomainError);
  EXPECT_THROW(twisted_euler_classical(1, Rat(0)), DomainError);
}

TEST(TwistedEulerClassical, MatchesGeneratingFunctionOracle) {
  for (Rat w : {Rat(1, 2), Rat(1, 3), Rat(2)}) {
    auto c = oracle::twisted_euler_numbers(10, w);
    for (long n = 0; n <= 10; ++n) EXPECT_EQ(twisted_euler_classical(n, w), c[n]);
  }
}

TEST(ExpSeries, ReciprocalRoundTrip) {
  ExpSeries s = ExpSeries::exp(10, Rat(3)) + ExpSeries::constant(10, Rat(2));
  ExpSeries one = s * s.reciprocal();
  EXPECT_EQ(one.coeff(0), Rat(1));
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_TRUE(one.coeff(n).is_zero());
  EXPECT_THROW(ExpSeries::t(4).reciprocal(), VanishingDenominator);
}

}  // namespace
}  // namespace qgen
