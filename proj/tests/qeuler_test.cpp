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

#include "qgen/classical.hpp"
#include "qgen/error.hpp"
#include "qgen/qcore.hpp"
#include "qgen/qeuler.hpp"

namespace qgen {
namespace {

const Context kSym = Context::symbolic();

Rat at(const Scalar& s, const Rat& q) { return s.is_symbolic() ? s.eval(q) : s.exact(); }

QEulerSpec spec(long m, long h, long k, long x, Rat w = Rat(1)) { return {m, h, k, x, w}; }

Rat abs_diff(const Rat& a, const Rat& b) { return (a - b).abs(); }

TEST(QEulerHk, SingleTermAtDegreeZero) {
  for (long k = 1; k <= 3; ++k) {
    for (long h = -1; h <= 3; ++h) {
      for (Rat w : {Rat(1), Rat(1, 2)}) {
        Context c = Context::exact(Rat(1, 3));
        Scalar expect = (c.one() + c.q()).pow(k);
        for (long l = 0; l < k; ++l) expect = expect / (c.one() + c.constant(w) * c.q_pow(h - l));
        EXPECT_EQ(qeuler_hk(spec(0, h, k, 0, w), c), expect);
      }
    }
  }
}

TEST(QEulerHk, SymbolicExample) {
  Scalar v = qeuler_hk(spec(1, 1, 1, 0), kSym);
  QRat expect(QPoly(std::vector<Rat>{Rat(0), Rat(-1)}), QPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(1)}));
  EXPECT_EQ(v.symbolic(), expect);
}

TEST(QEulerHk, ExactMatchesSymbolic) {
  for (Rat q : {Rat(1, 2), Rat(4), Rat(-3, 7)}) {
    Context c = Context::exact(q);
    for (long k = 1; k <= 3; ++k)
      for (long m = 0; m <= 3; ++m)
        for (long x = 0; x <= 2; ++x)
          EXPECT_EQ(qeuler_hk(spec(m, k, k, x, Rat(4)), c).exact(),
                    qeuler_hk(spec(m, k, k, x, Rat(4)), kSym).eval(q));
  }
}

TEST(QEulerHk, ClassicalLimit) {
  for (long k = 1; k <= 3; ++k)
    for (long h = k - 1; h <= k + 1; ++h)
      for (long m = 0; m <= 4; ++m)
        for (long x = 0; x <= 2; ++x)
          EXPECT_EQ(qeuler_hk(spec(m, h, k, x), kSym).eval(Rat(1)),
                    higher_euler_poly(m, k).eval(Rat(x)))
              << m << "," << h << "," << k << "," << x;
}

TEST(QEulerHk, VanishingDenominatorIsReported) {
  // 1 + w q^{h} = 0 at w = -1/2, q = 2, h = 1
  EXPECT_THROW(qeuler_hk(spec(0, 1, 1, 0, Rat(-1, 2)), Context::exact(Rat(2))), VanishingDenominator);
}

TEST(QEulerHk, PadicOracleSpotChecks) {
  const std::vector<long> levels{1, 2, 3};
  const Rat q(4);
  Context c = Context::exact(q);
  for (auto s : {spec(1, 2, 2, 0), spec(2, 1, 1, 0), spec(3, 1, 2, 1, Rat(4)), spec(0, 0, 1, 2, Rat(4))}) {
    auto rep = padic_limit_check(QBracketMonomial{s.m, s.k, s.h, s.w, s.x}, qeuler_hk(s, c).exact(), q, 3,
                                 levels);
    EXPECT_TRUE(rep.verdict) << s.m << "," << s.h << "," << s.k << "," << s.x;
  }
}

TEST(QEulerHk, RealSeriesWithinTailBound) {
  const Rat q(1, 2);
  Context c = Context::exact(q);
  SeriesParams sp;
  sp.M = 40;
  for (long k = 1; k <= 2; ++k)
    for (long h = k; h <= k + 1; ++h)
      for (long m = 0; m <= 3; ++m) {
        auto s = spec(m, h, k, 1);
        auto r = real_series(QBracketMonomial{m, k, h, Rat(1), 1}, q, sp);
        EXPECT_LE(abs_diff(r.value, qeuler_hk(s, c).exact()), r.tail_bound);
      }
}

TEST(QEulerSeries, CesaroExamples) {
  const Rat q(1, 2);
  Context c = Context::exact(q);
  SeriesParams sp;
  sp.mode = SummationMode::Cesaro1;
  auto r0 = qeuler_hk_series(spec(0, 0, 1, 0), q, sp);
  EXPECT_EQ(r0.value, Rat(3, 4));
  EXPECT_EQ(qeuler_hk(spec(0, 0, 1, 0), c).exact(), Rat(3, 4));
  // O(1/M) convergence: the error at M = 800 is smaller than at M = 400
  auto err = [&](long M) {
    SeriesParams s2 = sp;
    s2.M = M;
    return abs_diff(qeuler_hk_series(spec(1, 0, 1, 0), q, s2).value, qeuler_hk(spec(1, 0, 1, 0), c).exact());
  };
  EXPECT_LT(err(800), err(400));
  EXPECT_LT(err(400), Rat(1, 100));
}

TEST(QEulerSeries, PreconditionsEnforced) {
  SeriesParams direct;
  EXPECT_THROW(qeuler_hk_series(spec(1, 0, 1, 0), Rat(1, 2), direct), DivergenceError);
  SeriesParams ces;
  ces.mode = SummationMode::Cesaro1;
  EXPECT_THROW(qeuler_hk_series(spec(1, 1, 1, 0), Rat(1, 2), ces), std::invalid_argument);
  EXPECT_THROW(qeuler_twisted_hk_series(spec(1, 0, 1, 0, Rat(2)), Rat(1, 2), direct), DivergenceError);
}

TEST(QEulerTwisted, Examples) {
  Context c = Context::exact(Rat(1, 2));
  EXPECT_EQ(qeuler_twisted(1, Rat(1, 2), c).exact(), Rat(-4, 15));
  for (Rat q : {Rat(1, 2), Rat(4)}) {
    Context cq = Context::exact(q);
    EXPECT_EQ(qeuler_twisted(0, Rat(1), cq).exact(), Rat(1));
    EXPECT_EQ(qeuler_twisted(0, Rat(1, 3), cq).exact(), (Rat(1) + q) / (Rat(1) + q / Rat(3)));
  }
  for (long n = 0; n <= 6; ++n) {
    EXPECT_EQ(qeuler_twisted(n, Rat(1), kSym), qeuler_hk(spec(n, 1, 1, 0), kSym));
    EXPECT_EQ(qeuler_twisted(n, Rat(1, 2), kSym), qeuler_hk(spec(n, 1, 1, 0, Rat(1, 2)), kSym));
  }
}

TEST(QEulerTwisted, SeriesDirect) {
  const Rat q(1, 2);
  Context c = Context::exact(q);
  SeriesParams sp;
  sp.M = 80;
  auto r = qeuler_twisted_hk_series(spec(1, 0, 1, 0, Rat(1, 2)), q, sp);
  EXPECT_LE(abs_diff(r.value, qeuler_hk(spec(1, 0, 1, 0, Rat(1, 2)), c).exact()), r.tail_bound);
  auto r6 = qeuler_twisted_hk_series(spec(0, 1, 2, 0, Rat(1, 2)), q, sp);
  EXPECT_EQ(qeuler_hk(spec(0, 1, 2, 0, Rat(1, 2)), c).exact(), Rat(6, 5));
  EXPECT_LE(abs_diff(r6.value, Rat(6, 5)), r6.tail_bound);
}

TEST(QEulerTwisted, ReducesAtUnitTwist) {
  const Rat q(1, 2);
  SeriesParams sp;
  sp.mode = SummationMode::Cesaro1;
  sp.M = 60;
  for (long k = 1; k <= 2; ++k)
    for (long m = 0; m <= 2; ++m) {
      auto a = qeuler_twisted_hk_series(spec(m, k - 1, k, 1), q, sp);
      auto b = qeuler_hk_series(spec(m, k - 1, k, 1), q, sp);
      EXPECT_EQ(a.value, b.value);
    }
}

TEST(GeneratingFunction, ZeroArgumentCollapses) {
  SeriesParams sp;
  sp.mode = SummationMode::Cesaro1;
  sp.M = 100;
  const Rat q(1, 2);
  for (long k = 1; k <= 2; ++k) {
    auto g = gf_eval(GfKind::F_qk, k, 1, Rat(1), q, Rat(0), sp);
    EXPECT_EQ(g.rhs, qeuler_hk(spec(0, k - 1, k, 1), Context::exact(q)).exact());
    EXPECT_EQ(g.lhs, qeuler_hk_series(spec(0, k - 1, k, 1), q, sp).value);
  }
}

TEST(GeneratingFunction, GenocchiPrefixVanishes) {
  SeriesParams sp;
  sp.mode = SummationMode::Cesaro1;
  sp.M = 40;
  for (long k = 1; k <= 3; ++k) {
    for (auto kind : {GfKind::h_qk, GfKind::h_qkw}) {
      auto g = gf_eval(kind, k, 0, Rat(1, 2), Rat(1, 2), Rat(1, 4), sp);
      for (long j = 0; j < k; ++j) EXPECT_TRUE(g.rhs_coeffs.at(static_cast<std::size_t>(j)).is_zero());
    }
  }
}

TEST(GeneratingFunction, SidesAgree) {
  SeriesParams sp;
  sp.mode = SummationMode::Cesaro1;
  auto g = gf_eval(GfKind::F_qk, 1, 0, Rat(1), Rat(1, 2), Rat(1, 4), sp);
  EXPECT_LE(abs_diff(g.lhs, g.rhs), Rat(1, 100));
}

}  // namespace
}  // namespace qgen
