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

#include "qgen/cli/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

#include "qgen/classical.hpp"
#include "qgen/error.hpp"
#include "qgen/padic.hpp"
#include "qgen/qcore.hpp"
#include "qgen/qeuler.hpp"
#include "qgen/qgenocchi.hpp"

namespace qgen::cli {

namespace {

constexpr std::size_t kMaxReportedPoints = 8;

std::string approx(const Rat& r) {
  mpq_class v(r.numerator(), r.denominator());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v.get_d());
  return buf;
}

std::string show(const std::vector<std::optional<long>>& vals) {
  std::string s = "[";
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) s += ',';
    s += vals[i] ? std::to_string(*vals[i]) : "inf";
  }
  return s + "]";
}

class Checker {
 public:
  explicit Checker(std::string name) { r_.name = std::move(name); }

  /// Counts one grid point; exceptions count as failures.
  void check(const std::function<bool()>& ok, const std::function<std::string()>& label) {
    ++r_.grid;
    std::string why;
    bool good = false;
    try {
      good = ok();
    } catch (const std::exception& e) {
      why = std::string(": ") + e.what();
    }
    if (good) return;
    ++r_.failures;
    if (r_.failing_points.size() < kMaxReportedPoints) r_.failing_points.push_back(label() + why);
  }

  void worst(std::string w) { r_.worst = std::move(w); }
  PropertyResult done() { return std::move(r_); }

 private:
  PropertyResult r_;
};

struct MaxTracker {
  std::optional<Rat> value;
  void see(const Rat& r) {
    if (!value || r > *value) value = r;
  }
  std::string text(const std::string& prefix) const { return value ? prefix + approx(*value) : ""; }
};

struct MinTracker {
  std::optional<long> value;
  void see(std::optional<long> v) {
    if (v && (!value || *v < *value)) value = v;
  }
  std::string text(const std::string& prefix) const {
    return prefix + (value ? std::to_string(*value) : "inf");
  }
};

const Context kSym = Context::symbolic();

std::string pt(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ' ';
    s += std::string(k) + '=' + v;
  }
  return s;
}

std::string str(long v) { return std::to_string(v); }
std::string str(const Rat& v) { return v.to_string(); }

std::vector<long> level_range(long last) {
  std::vector<long> v;
  for (long n = 1; n <= last; ++n) v.push_back(n);
  return v;
}

Rat genocchi_scale(long n, long k) { return Rat(BigInt(factorial(k) * binomial(n + k, k))); }

}  // namespace

namespace props {

PropertyResult q_combinatorics(long n_exact, long n_recursion) {
  Checker c("gaussian-binomial-forms");
  auto lower = gauss_binom_table(n_recursion, n_recursion, kSym, BinomRecursion::Lower);
  auto upper = gauss_binom_table(n_recursion, n_recursion, kSym, BinomRecursion::Upper);
  for (long n = 0; n <= n_recursion; ++n) {
    for (long k = 0; k <= n; ++k) {
      auto label = [=] { return pt({{"n", str(n)}, {"k", str(k)}}); };
      c.check([&] { return lower[n][k] == upper[n][k]; }, label);
      if (n > n_exact) continue;
      c.check([&] { return lower[n][k] == gauss_binom_quotient(n, k, kSym); }, label);
      c.check([&] { return lower[n][k] == Scalar(QRat(gauss_binom_compositions(n, k))); }, label);
    }
  }
  return c.done();
}

PropertyResult q_binomial_formula(long n_expand, long n_reciprocal, long order) {
  Checker c("q-binomial-formula");
  for (long n = 0; n <= n_expand; ++n) {
    auto prod = pochhammer_expand(n, kSym);
    for (long k = 0; k <= n; ++k) {
      c.check(
          [&] {
            Scalar term = gauss_binom(n, k, kSym) * kSym.q_pow(k * (k - 1) / 2);
            if (k % 2) term = -term;
            return prod.at(static_cast<std::size_t>(k)) == term;
          },
          [=] { return pt({{"expand n", str(n)}, {"k", str(k)}}); });
    }
  }
  for (long n = 1; n <= n_reciprocal; ++n) {
    auto prod = pochhammer_expand(n, kSym);
    auto inv = inv_pochhammer_coeffs(n, order, kSym);
    for (long d = 0; d <= order; ++d) {
      c.check(
          [&] {
            Scalar acc = kSym.zero();
            for (long i = 0; i <= std::min(d, n); ++i) acc += prod[i] * inv[d - i];
            return acc == (d == 0 ? kSym.one() : kSym.zero());
          },
          [=] { return pt({{"reciprocal n", str(n)}, {"b^", str(d)}}); });
    }
  }
  return c.done();
}

PropertyResult evaluation_homomorphism() {
  Checker c("evaluation-homomorphism");
  for (Rat q0 : {Rat(1, 2), Rat(2, 3), Rat(4), Rat(-2)}) {
    const Context ex = Context::exact(q0);
    for (long n = 0; n <= 8; ++n) {
      auto label = [=] { return pt({{"q", str(q0)}, {"n", str(n)}}); };
      c.check([&] { return q_int(n, kSym).eval(q0) == q_int(n, ex).exact(); }, label);
      c.check([&] { return q_factorial(n, kSym).eval(q0) == q_factorial(n, ex).exact(); }, label);
      c.check([&] { return q_bracket_neg(n, kSym).eval(q0) == q_bracket_neg(n, ex).exact(); }, label);
      for (long k = 0; k <= n; ++k) {
        c.check([&] { return gauss_binom(n, k, kSym).eval(q0) == gauss_binom(n, k, ex).exact(); },
                label);
      }
    }
  }
  return c.done();
}

PropertyResult genocchi_bernoulli(long n_max) {
  Checker c("genocchi-bernoulli");
  for (long n = 2; n <= n_max; n += 2) {
    c.check([&] { return genocchi(n) == Rat(2) * (Rat(1) - Rat(2).pow(n)) * bernoulli(n); },
            [=] { return pt({{"n", str(n)}}); });
  }
  return c.done();
}

PropertyResult genocchi_euler(long n_max) {
  Checker c("genocchi-euler");
  for (long n = 1; n <= n_max; ++n) {
    c.check([&] { return genocchi(n) == Rat(n) * euler_number(n - 1); },
            [=] { return pt({{"n", str(n)}}); });
  }
  return c.done();
}

PropertyResult euler_complementarity(long n_max) {
  Checker c("euler-complementarity");
  for (long n = 0; n <= n_max; ++n) {
    c.check(
        [&] {
          XPoly e = euler_poly(n);
          return e.shifted(Rat(1)) + e == XPoly::monomial(n, Rat(2));
        },
        [=] { return pt({{"n", str(n)}}); });
  }
  return c.done();
}

PropertyResult odd_genocchi_vanish(long n_max) {
  Checker c("odd-genocchi-vanish");
  c.check([] { return genocchi(1) == Rat(1); }, [] { return std::string("n=1"); });
  for (long n = 3; n <= n_max; n += 2) {
    c.check([&] { return genocchi(n).is_zero(); }, [=] { return pt({{"n", str(n)}}); });
  }
  return c.done();
}

PropertyResult order_one_reduction(long n_max) {
  Checker c("order-one-reduction");
  for (long n = 0; n <= n_max; ++n) {
    auto label = [=] { return pt({{"n", str(n)}}); };
    c.check([&] { return higher_euler_poly(n, 1) == euler_poly(n); }, label);
    c.check([&] { return higher_genocchi(n, 1) == genocchi(n); }, label);
  }
  return c.done();
}

PropertyResult frobenius_at_zero(long n_max) {
  Checker c("frobenius-at-zero");
  for (Rat u : {Rat(2), Rat(-2), Rat(1, 3)}) {
    for (long n = 0; n <= n_max; ++n) {
      c.check([&] { return frobenius_euler_poly(n, u).eval(Rat(0)) == frobenius_euler(n, u); },
              [=] { return pt({{"u", str(u)}, {"n", str(n)}}); });
    }
  }
  for (long n = 0; n <= 12; ++n) {
    c.check([&] { return frobenius_euler(n, Rat(-1)) == euler_number(n); },
            [=] { return pt({{"u", "-1"}, {"n", str(n)}}); });
  }
  return c.done();
}

PropertyResult higher_order_factorial(long n_max, long r_max) {
  Checker c("genocchi-euler-order-r");
  c.check([] { return higher_genocchi(4, 2) == Rat(6); }, [] { return std::string("anchor G_4^(2)"); });
  for (long r = 1; r <= r_max; ++r) {
    for (long j = 0; j < r; ++j) {
      c.check([&] { return higher_genocchi(j, r).is_zero(); },
              [=] { return pt({{"prefix j", str(j)}, {"r", str(r)}}); });
    }
    for (long n = 0; n <= n_max; ++n) {
      c.check(
          [&] {
            return higher_genocchi(n + r, r) ==
                   Rat(falling_factorial(n + r, r)) * higher_euler_poly(n, r).eval(Rat(0));
          },
          [=] { return pt({{"n", str(n)}, {"r", str(r)}}); });
    }
  }
  return c.done();
}

PropertyResult twisted_euler_remark(long n_max) {
  Checker c("twisted-euler-frobenius");
  c.check([] { return twisted_euler_classical(1, Rat(1, 2)) == Rat(-4, 9); },
          [] { return std::string("anchor E_1(1/2)"); });
  MaxTracker slack;
  for (Rat w : {Rat(1, 2), Rat(1, 3), Rat(2)}) {
    // 2/(w e^t + 1), expanded without the Frobenius-Euler route
    const auto order = static_cast<std::size_t>(n_max);
    ExpSeries den = ExpSeries::exp(order).scaled(w) + ExpSeries::constant(order, Rat(1));
    ExpSeries gf = ExpSeries::constant(order, Rat(2)).divided_by(den);
    for (long n = 0; n <= n_max; ++n) {
      auto label = [=] { return pt({{"w", str(w)}, {"n", str(n)}}); };
      c.check([&] { return twisted_euler_classical(n, w) == gf.coeff(static_cast<std::size_t>(n)); },
              label);
      if (w.abs() >= Rat(1)) continue;
      c.check(
          [&] {
            SeriesParams sp;
            sp.M = 200;
            auto s = real_series(ClassicalMonomial{n, w, 0}, Rat(1), sp);
            Rat err = (s.value - twisted_euler_classical(n, w)).abs();
            slack.see(err);
            return err <= s.tail_bound;
          },
          label);
    }
  }
  c.worst(slack.text("max series error "));
  return c.done();
}

PropertyResult measure_normalization(long level_max) {
  Checker c("fermionic-normalization");
  const IntegrandFamily one = ClassicalMonomial{0, Rat(1), 0};
  for (Rat q : {Rat(4), Rat(1), Rat(1, 2), Rat(-2), Rat(7)}) {
    for (long N = 1; N <= level_max; ++N) {
      c.check([&] { return fermionic_sum(one, q, PadicParams{3, N}) == Rat(1); },
              [=] { return pt({{"q", str(q)}, {"N", str(N)}}); });
    }
  }
  return c.done();
}

PropertyResult measure_distribution(long level_max) {
  Checker c("measure-distribution");
  for (Rat q : {Rat(4), Rat(1), Rat(1, 2)}) {
    for (long N = 2; N <= level_max; ++N) {
      const PadicParams fine{3, N}, coarse{3, N - 1};
      for (long a = 0; a < coarse.modulus(); ++a) {
        c.check(
            [&] {
              Rat sum;
              for (long i = 0; i < 3; ++i) sum += measure_value(a + i * coarse.modulus(), fine, q);
              return sum == measure_value(a, coarse, q);
            },
            [=] { return pt({{"q", str(q)}, {"N", str(N)}, {"a", str(a)}}); });
      }
    }
  }
  return c.done();
}

PropertyResult shift_identity(long level_max) {
  Checker c("shift-identity");
  const auto levels = level_range(level_max);
  MinTracker final_v;
  const Rat q(4);
  for (long shift = 1; shift <= 3; ++shift) {
    for (Rat w : {Rat(1), Rat(4)}) {
      for (long d = 0; d <= 3; ++d) {
        for (int kind = 0; kind < 2; ++kind) {
          IntegrandFamily f = kind == 0 ? IntegrandFamily(ClassicalMonomial{d, w, 0})
                                        : IntegrandFamily(QBracketMonomial{d, 1, 1, w, 0});
          std::vector<std::optional<long>> vals;
          c.check(
              [&] {
                for (long N : levels) {
                  vals.push_back(valuation(shift_identity_residual(f, shift, q, PadicParams{3, N}), 3));
                }
                final_v.see(vals.back());
                return valuation_verdict(levels, vals);
              },
              [&] {
                return pt({{kind == 0 ? "classical n" : "bracket m", str(d)}, {"w", str(w)},
                           {"shift", str(shift)}, {"v", show(vals)}});
              });
        }
      }
    }
    for (long N : levels) {
      c.check(
          [&] {
            return shift_identity_residual(ClassicalMonomial{0, Rat(1), 0}, shift, Rat(1),
                                           PadicParams{3, N})
                .is_zero();
          },
          [=] { return pt({{"constant q", "1"}, {"shift", str(shift)}, {"N", str(N)}}); });
    }
  }
  c.worst(final_v.text("min final valuation "));
  return c.done();
}

PropertyResult series_tail_shrinks() {
  Checker c("series-tail-bound");
  const Rat q(1, 2);
  const Context ex = Context::exact(q);
  for (long k = 1; k <= 2; ++k) {
    for (long h = k; h <= k + 1; ++h) {
      for (long m = 0; m <= 3; ++m) {
        c.check(
            [&] {
              const Rat cf = qeuler_hk(QEulerSpec{m, h, k, 0, Rat(1)}, ex).exact();
              std::optional<Rat> prev;
              for (long M : {10L, 20L, 40L}) {
                SeriesParams sp;
                sp.M = M;
                auto s = real_series(QBracketMonomial{m, k, h, Rat(1), 0}, q, sp);
                if ((s.value - cf).abs() > s.tail_bound) return false;
                if (prev && !(s.tail_bound < *prev)) return false;
                prev = s.tail_bound;
              }
              return true;
            },
            [=] { return pt({{"m", str(m)}, {"h", str(h)}, {"k", str(k)}}); });
      }
    }
  }
  return c.done();
}

PropertyResult qeuler_padic_oracle(const VerifyConfig& cfg) {
  Checker c("padic-oracle");
  const Rat q(static_cast<long>(cfg.p) + 1);
  const Context ex = Context::exact(q);
  MinTracker final_v;
  for (Rat w : {Rat(1), q}) {
    for (long k = 1; k <= 3; ++k) {
      const long m_max = k <= 2 ? 4 : 2;
      const auto levels = level_range(k <= 2 ? cfg.padic_level : std::min(cfg.padic_level, 2L));
      for (long h = k - 1; h <= k + 1; ++h) {
        for (long m = 0; m <= m_max; ++m) {
          for (long x = 0; x <= 2; ++x) {
            ValuationReport rep;
            c.check(
                [&] {
                  const Rat cf = qeuler_hk(QEulerSpec{m, h, k, x, w}, ex).exact();
                  rep = padic_limit_check(QBracketMonomial{m, k, h, w, x}, cf, q, cfg.p, levels,
                                          cfg.term_budget);
                  final_v.see(rep.valuations.back());
                  return rep.verdict;
                },
                [&] {
                  return pt({{"m", str(m)}, {"h", str(h)}, {"k", str(k)}, {"x", str(x)},
                             {"w", str(w)}, {"v", show(rep.valuations)}});
                });
          }
        }
      }
    }
  }
  c.worst(final_v.text("min final valuation "));
  return c.done();
}

PropertyResult qeuler_real_oracle(long M, const Rat& bound_cap) {
  Checker c("real-series-oracle");
  const Rat q(1, 2);
  const Context ex = Context::exact(q);
  MaxTracker bound;
  for (Rat w : {Rat(1), Rat(1, 2)}) {
    for (long k = 1; k <= 2; ++k) {
      for (long h = k; h <= k + 1; ++h) {
        for (long m = 0; m <= 3; ++m) {
          for (long x = 0; x <= 2; ++x) {
            c.check(
                [&] {
                  SeriesParams sp;
                  sp.M = M;
                  auto s = real_series(QBracketMonomial{m, k, h, w, x}, q, sp);
                  bound.see(s.tail_bound);
                  const Rat cf = qeuler_hk(QEulerSpec{m, h, k, x, w}, ex).exact();
                  return (s.value - cf).abs() <= s.tail_bound && s.tail_bound <= bound_cap;
                },
                [=] {
                  return pt({{"m", str(m)}, {"h", str(h)}, {"k", str(k)}, {"x", str(x)},
                             {"w", str(w)}});
                });
          }
        }
      }
    }
  }
  c.worst(bound.text("max tail bound "));
  return c.done();
}

PropertyResult qeuler_boundary_series(const VerifyConfig& cfg) {
  Checker c("boundary-series");
  const Rat q(1, 2);
  const Context ex = Context::exact(q);
  MaxTracker err;
  SeriesParams sp;
  sp.M = cfg.cesaro_M;
  sp.mode = SummationMode::Cesaro1;
  sp.cesaro_tolerance = cfg.cesaro_tolerance;
  for (Rat w : {Rat(1), Rat(1, 2)}) {
    for (long k = 1; k <= 2; ++k) {
      for (long m = 0; m <= 3; ++m) {
        for (long x = 0; x <= 2; ++x) {
          Rat e;
          c.check(
              [&] {
                const QEulerSpec s{m, k - 1, k, x, w};
                auto v = w == Rat(1) ? qeuler_hk_series(s, q, sp) : qeuler_twisted_hk_series(s, q, sp);
                e = (v.value - qeuler_hk(s, ex).exact()).abs();
                err.see(e);
                return e <= cfg.cesaro_tolerance;
              },
              [&] {
                return pt({{"m", str(m)}, {"k", str(k)}, {"x", str(x)}, {"w", str(w)},
                           {"error", approx(e)}});
              });
        }
      }
    }
  }
  c.worst(err.text("max error "));
  return c.done();
}

PropertyResult qeuler_classical_limit() {
  Checker c("qeuler-classical-limit");
  for (long k = 1; k <= 3; ++k) {
    for (long h = k - 1; h <= k + 1; ++h) {
      for (long m = 0; m <= 4; ++m) {
        for (long x = 0; x <= 2; ++x) {
          c.check(
              [&] {
                return qeuler_hk(QEulerSpec{m, h, k, x, Rat(1)}, kSym).eval(Rat(1)) ==
                       higher_euler_poly(m, k).eval(Rat(x));
              },
              [=] { return pt({{"m", str(m)}, {"h", str(h)}, {"k", str(k)}, {"x", str(x)}}); });
        }
      }
    }
  }
  return c.done();
}

PropertyResult qeuler_twist_reduction() {
  Checker c("qeuler-twist-reduction");
  for (long n = 0; n <= 6; ++n) {
    for (Rat w : {Rat(1), Rat(1, 2), Rat(4)}) {
      c.check([&] { return qeuler_twisted(n, w, kSym) == qeuler_hk(QEulerSpec{n, 1, 1, 0, w}, kSym); },
              [=] { return pt({{"n", str(n)}, {"w", str(w)}}); });
    }
  }
  SeriesParams sp;
  sp.M = 60;
  sp.mode = SummationMode::Cesaro1;
  for (long k = 1; k <= 2; ++k) {
    for (long m = 0; m <= 2; ++m) {
      c.check(
          [&] {
            const QEulerSpec s{m, k - 1, k, 1, Rat(1)};
            return qeuler_twisted_hk_series(s, Rat(1, 2), sp).value ==
                   qeuler_hk_series(s, Rat(1, 2), sp).value;
          },
          [=] { return pt({{"series m", str(m)}, {"k", str(k)}}); });
    }
  }
  return c.done();
}

PropertyResult gf_structure(const VerifyConfig& cfg) {
  Checker c("generating-functions");
  const Rat q(1, 2);
  const Context ex = Context::exact(q);
  SeriesParams sp;
  sp.M = cfg.cesaro_M;
  sp.mode = SummationMode::Cesaro1;
  for (long k = 1; k <= 2; ++k) {
    for (long x = 0; x <= 2; ++x) {
      c.check(
          [&] {
            auto g = gf_eval(GfKind::F_qk, k, x, Rat(1), q, Rat(0), sp);
            const QEulerSpec s{0, k - 1, k, x, Rat(1)};
            return g.rhs == qeuler_hk(s, ex).exact() && g.lhs == qeuler_hk_series(s, q, sp).value;
          },
          [=] { return pt({{"t", "0"}, {"k", str(k)}, {"x", str(x)}}); });
    }
  }
  for (long k = 1; k <= 3; ++k) {
    for (auto kind : {GfKind::h_qk, GfKind::h_qkw}) {
      c.check(
          [&] {
            SeriesParams small = sp;
            small.M = 40;
            auto g = gf_eval(kind, k, 0, Rat(1, 2), q, Rat(1, 4), small);
            for (long j = 0; j < k; ++j) {
              if (!g.rhs_coeffs.at(static_cast<std::size_t>(j)).is_zero()) return false;
            }
            return true;
          },
          [=] { return pt({{"prefix k", str(k)}, {"kind", kind == GfKind::h_qk ? "h_qk" : "h_qkw"}}); });
    }
  }
  Rat e;
  c.check(
      [&] {
        auto g = gf_eval(GfKind::F_qk, 1, 0, Rat(1), q, Rat(1, 4), sp);
        e = (g.lhs - g.rhs).abs();
        return e <= cfg.cesaro_tolerance;
      },
      [&] { return pt({{"F_qk k", "1"}, {"t", "1/4"}, {"error", approx(e)}}); });
  return c.done();
}

PropertyResult qgenocchi_index_shift(long M) {
  Checker c("genocchi-index-shift");
  const Rat q(1, 2);
  const Context ex = Context::exact(q);
  for (long n = 0; n <= 5; ++n) {
    c.check(
        [&] {
          SeriesParams sp;
          sp.M = M;
          auto s = real_series(QBracketMonomial{n, 1, 1, Rat(1), 0}, q, sp);
          const Rat moment = qgenocchi(n + 1, ex).exact() / Rat(n + 1);
          return (s.value - moment).abs() <= s.tail_bound;
        },
        [=] { return pt({{"n", str(n)}}); });
  }
  return c.done();
}

PropertyResult qgenocchi_padic_oracle(const VerifyConfig& cfg) {
  Checker c("padic-oracle");
  const Rat q(static_cast<long>(cfg.p) + 1);
  const Context ex = Context::exact(q);
  MinTracker final_v;
  for (Rat w : {Rat(1), q}) {
    for (long k = 1; k <= 3; ++k) {
      const long n_max = k <= 2 ? 3 : 2;
      const auto levels = level_range(k <= 2 ? cfg.padic_level : std::min(cfg.padic_level, 2L));
      for (long h = k - 1; h <= k + 1; ++h) {
        for (long n = 0; n <= n_max; ++n) {
          ValuationReport rep;
          c.check(
              [&] {
                const Rat target = qgenocchi_hk(QGenocchiSpec{n, h, k, w}, ex).exact() / genocchi_scale(n, k);
                rep = padic_limit_check(QBracketMonomial{n, k, h, w, 0}, target, q, cfg.p, levels,
                                        cfg.term_budget);
                final_v.see(rep.valuations.back());
                return rep.verdict;
              },
              [&] {
                return pt({{"n", str(n)}, {"h", str(h)}, {"k", str(k)}, {"w", str(w)},
                           {"v", show(rep.valuations)}});
              });
        }
      }
    }
  }
  c.worst(final_v.text("min final valuation "));
  return c.done();
}

PropertyResult qgenocchi_real_oracle(long M, const Rat& bound_cap) {
  Checker c("real-series-oracle");
  const Rat q(1, 2);
  const Context ex = Context::exact(q);
  MaxTracker bound;
  for (Rat w : {Rat(1), Rat(1, 2)}) {
    for (long k = 1; k <= 2; ++k) {
      for (long h = k; h <= k + 1; ++h) {
        for (long n = 0; n <= 3; ++n) {
          c.check(
              [&] {
                SeriesParams sp;
                sp.M = M;
                auto s = real_series(QBracketMonomial{n, k, h, w, 0}, q, sp);
                bound.see(s.tail_bound);
                const Rat cf = qgenocchi_hk(QGenocchiSpec{n, h, k, w}, ex).exact() / genocchi_scale(n, k);
                return (s.value - cf).abs() <= s.tail_bound && s.tail_bound <= bound_cap;
              },
              [=] { return pt({{"n", str(n)}, {"h", str(h)}, {"k", str(k)}, {"w", str(w)}}); });
        }
      }
    }
  }
  c.worst(bound.text("max tail bound "));
  return c.done();
}

PropertyResult qgenocchi_boundary_series(const VerifyConfig& cfg) {
  Checker c("boundary-series");
  const Rat q(1, 2);
  const Context ex = Context::exact(q);
  MaxTracker err;
  SeriesParams sp;
  sp.M = cfg.cesaro_M;
  sp.mode = SummationMode::Cesaro1;
  sp.cesaro_tolerance = cfg.cesaro_tolerance;
  for (Rat w : {Rat(1), Rat(1, 2)}) {
    for (long k = 1; k <= 2; ++k) {
      for (long n = 0; n <= 3; ++n) {
        Rat e;
        c.check(
            [&] {
              const QGenocchiSpec s{n, k - 1, k, w};
              e = (qgenocchi_hk_series(s, q, sp).value - qgenocchi_hk(s, ex).exact()).abs();
              err.see(e);
              return e <= cfg.cesaro_tolerance;
            },
            [&] {
              return pt({{"n", str(n)}, {"k", str(k)}, {"w", str(w)}, {"error", approx(e)}});
            });
      }
    }
  }
  c.worst(err.text("max error "));
  return c.done();
}

PropertyResult qgenocchi_classical_limit() {
  Checker c("qgenocchi-classical-limit");
  for (long n = 0; n <= 10; ++n) {
    c.check([&] { return qgenocchi(n, kSym).eval(Rat(1)) == genocchi(n); },
            [=] { return pt({{"n", str(n)}}); });
  }
  for (long k = 1; k <= 3; ++k) {
    for (long n = 0; n <= 4; ++n) {
      c.check(
          [&] {
            return qgenocchi_hk(QGenocchiSpec{n, k - 1, k, Rat(1)}, kSym).eval(Rat(1)) ==
                   higher_genocchi(n + k, k);
          },
          [=] { return pt({{"hk n", str(n)}, {"k", str(k)}}); });
    }
  }
  return c.done();
}

PropertyResult genocchi_coefficient_forms(long n_max, long k_max) {
  Checker c("genocchi-coefficient-forms");
  for (long k = 1; k <= k_max; ++k) {
    for (long n = 0; n <= n_max; ++n) {
      c.check(
          [&] {
            const Rat s = genocchi_scale(n, k);
            return s == Rat(falling_factorial(n + k, k)) &&
                   s * higher_euler_poly(n, k).eval(Rat(0)) == higher_genocchi(n + k, k);
          },
          [=] { return pt({{"n", str(n)}, {"k", str(k)}}); });
    }
  }
  return c.done();
}

PropertyResult qgenocchi_twist_continuity() {
  Checker c("qgenocchi-twist-continuity");
  for (long n = 0; n <= 8; ++n) {
    c.check([&] { return qgenocchi_twisted(n, Rat(1), kSym) == qgenocchi(n, kSym); },
            [=] { return pt({{"n", str(n)}}); });
  }
  for (long k = 1; k <= 3; ++k) {
    for (long h = k - 1; h <= k; ++h) {
      for (long n = 0; n <= 4; ++n) {
        c.check(
            [&] {
              return qgenocchi_hk(QGenocchiSpec{n, h, k, Rat(1)}, kSym) ==
                     kSym.constant(genocchi_scale(n, k)) * qeuler_hk(QEulerSpec{n, h, k, 0, Rat(1)}, kSym);
            },
            [=] { return pt({{"hk n", str(n)}, {"h", str(h)}, {"k", str(k)}}); });
      }
    }
  }
  return c.done();
}

PropertyResult qgenocchi_unit() {
  Checker c("qgenocchi-unit");
  for (Rat q : {Rat(1, 2), Rat(1, 3), Rat(4)}) {
    c.check([&] { return qgenocchi(1, Context::exact(q)).exact() == Rat(1); },
            [=] { return pt({{"q", str(q)}}); });
  }
  c.check([] { return qgenocchi(1, kSym) == kSym.one(); }, [] { return std::string("symbolic"); });
  return c.done();
}

PropertyResult twist_collapse() {
  Checker c("twist-collapse");
  for (long n = 0; n <= 8; ++n) {
    auto label = [=] { return pt({{"n", str(n)}}); };
    c.check([&] { return qeuler_twisted(n, Rat(1), kSym) == qeuler_hk(QEulerSpec{n, 1, 1, 0, Rat(1)}, kSym); },
            label);
    c.check([&] { return qgenocchi_twisted(n, Rat(1), kSym) == qgenocchi(n, kSym); }, label);
    c.check([&] { return twisted_euler_classical(n, Rat(1)) == euler_number(n); }, label);
    for (long k = 1; k <= 3; ++k) {
      c.check(
          [&] {
            return qgenocchi_hk(QGenocchiSpec{n, k - 1, k, Rat(1)}, kSym) ==
                   qgenocchi_hk_at(n + k, k - 1, k, Rat(1), kSym);
          },
          label);
    }
    for (Rat w : {Rat(1, 2), Rat(1, 3), Rat(2)}) {
      auto wl = [=] { return pt({{"n", str(n)}, {"w", str(w)}}); };
      c.check([&] { return qeuler_twisted(n, w, kSym).eval(Rat(1)) == twisted_euler_classical(n, w); },
              wl);
      c.check(
          [&] {
            const Rat classical = n == 0 ? Rat(0) : Rat(n) * twisted_euler_classical(n - 1, w);
            return qgenocchi_twisted(n, w, kSym).eval(Rat(1)) == classical;
          },
          wl);
    }
  }
  return c.done();
}

}  // namespace props

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"qcore",     "classical", "padic", "qeuler",
                                                 "qgenocchi", "limits",    "all"};
  return names;
}

std::vector<PropertyResult> run_suite(const std::string& suite, const VerifyConfig& cfg) {
  using namespace props;
  if (cfg.padic_level < 1) throw std::invalid_argument("padic level must be >= 1");
  std::vector<PropertyResult> out;
  auto add = [&](const std::string& s, PropertyResult r) {
    r.suite = s;
    out.push_back(std::move(r));
  };
  const Rat cap = Rat(1) / Rat(2).pow(20);
  if (suite == "qcore" || suite == "all") {
    add("qcore", q_combinatorics(12, 20));
    add("qcore", q_binomial_formula(10, 5, 12));
    add("qcore", evaluation_homomorphism());
  }
  if (suite == "classical" || suite == "all") {
    add("classical", genocchi_bernoulli(20));
    add("classical", genocchi_euler(20));
    add("classical", euler_complementarity(15));
    add("classical", odd_genocchi_vanish(19));
    add("classical", order_one_reduction(12));
    add("classical", frobenius_at_zero(10));
    add("classical", higher_order_factorial(10, 4));
    add("classical", twisted_euler_remark(10));
  }
  if (suite == "padic" || suite == "all") {
    add("padic", measure_normalization(std::min(cfg.padic_level, 4L)));
    add("padic", measure_distribution(4));
    add("padic", shift_identity(5));
    add("padic", series_tail_shrinks());
  }
  if (suite == "qeuler" || suite == "all") {
    add("qeuler", qeuler_padic_oracle(cfg));
    add("qeuler", qeuler_real_oracle(cfg.series_M, cap));
    add("qeuler", qeuler_boundary_series(cfg));
    add("qeuler", qeuler_classical_limit());
    add("qeuler", qeuler_twist_reduction());
    add("qeuler", gf_structure(cfg));
  }
  if (suite == "qgenocchi" || suite == "all") {
    add("qgenocchi", qgenocchi_index_shift(60));
    add("qgenocchi", qgenocchi_padic_oracle(cfg));
    add("qgenocchi", qgenocchi_real_oracle(cfg.series_M, cap));
    add("qgenocchi", qgenocchi_boundary_series(cfg));
    add("qgenocchi", qgenocchi_classical_limit());
    add("qgenocchi", genocchi_coefficient_forms(10, 4));
    add("qgenocchi", qgenocchi_twist_continuity());
    add("qgenocchi", qgenocchi_unit());
  }
  if (suite == "limits" || suite == "all") {
    add("limits", qeuler_classical_limit());
    add("limits", qgenocchi_classical_limit());
    add("limits", twist_collapse());
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

std::string format_line(const PropertyResult& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.suite << '/' << r.name << "  grid=" << r.grid;
  if (!r.passed()) os << " failures=" << r.failures;
  if (!r.worst.empty()) os << "  " << r.worst;
  for (const auto& p : r.failing_points) os << "\n    at " << p;
  return os.str();
}

Json report_json(const std::vector<PropertyResult>& results) {
  Json props = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    Json j = Json::object();
    j["suite"] = r.suite;
    j["name"] = r.name;
    j["grid"] = r.grid;
    j["passed"] = r.passed();
    j["failures"] = r.failures;
    j["worst"] = r.worst;
    j["failing_points"] = r.failing_points;
    props.push_back(j);
  }
  Json out = Json::object();
  out["passed"] = all;
  out["properties"] = props;
  return out;
}

}  // namespace qgen::cli
