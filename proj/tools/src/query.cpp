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

#include "qgen/cli/query.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>

#include "qgen/classical.hpp"
#include "qgen/padic.hpp"
#include "qgen/qcore.hpp"
#include "qgen/qeuler.hpp"
#include "qgen/qgenocchi.hpp"

namespace qgen::cli {

namespace {

struct FamilyInfo {
  std::vector<std::string> params;
  std::vector<std::string> modes;
  bool poly = false;
};

const std::map<std::string, FamilyInfo>& families() {
  static const std::map<std::string, FamilyInfo> table = {
      {"qnum", {{"n", "q"}, {"exact", "symbolic"}}},
      {"qbinom", {{"n", "k", "q"}, {"exact", "symbolic"}}},
      {"euler", {{"n", "x", "r"}, {"exact"}, true}},
      {"genocchi", {{"n", "x", "r"}, {"exact"}, true}},
      {"bernoulli", {{"n"}, {"exact"}}},
      {"frobenius", {{"n", "u", "x"}, {"exact"}, true}},
      {"qeuler",
       {{"m", "h", "k", "x", "w", "q", "p", "N", "M"}, {"exact", "symbolic", "padic", "series"}}},
      {"qgenocchi",
       {{"n", "h", "k", "w", "q", "p", "N", "M"}, {"exact", "symbolic", "padic", "series"}}},
      {"twisted-euler", {{"n", "w", "q", "M"}, {"exact", "symbolic", "series"}}},
      {"twisted-genocchi", {{"n", "w", "q"}, {"exact", "symbolic"}}},
      {"gf", {{"kind", "k", "x", "w", "q", "t", "M", "terms"}, {"exact", "series"}}},
  };
  return table;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

class Args {
 public:
  explicit Args(const Query& q) : q_(q) {}

  bool has(const std::string& name) const { return q_.params.count(name) > 0; }

  Rat rat(const std::string& name) const {
    auto it = q_.params.find(name);
    if (it == q_.params.end()) throw UsageError("--" + name + " is required for " + q_.family);
    try {
      return Rat::parse(it->second);
    } catch (const std::invalid_argument& e) {
      throw UsageError("--" + name + ": " + e.what());
    }
  }
  Rat rat_or(const std::string& name, const Rat& def) const { return has(name) ? rat(name) : def; }

  long integer(const std::string& name) const {
    Rat r = rat(name);
    if (!r.is_integer() || !r.numerator().fits_slong_p()) {
      throw UsageError("--" + name + " must be an integer, got " + r.to_string());
    }
    return r.numerator().get_si();
  }
  long integer_or(const std::string& name, long def) const { return has(name) ? integer(name) : def; }

  std::string text(const std::string& name) const {
    auto it = q_.params.find(name);
    if (it == q_.params.end()) throw UsageError("--" + name + " is required for " + q_.family);
    return it->second;
  }

 private:
  const Query& q_;
};

struct Outcome {
  Json value;
  Json meta = Json::object();
};

using ScalarFn = std::function<Scalar(const Context&)>;

bool degenerate_q(const Rat& q) { return q.is_zero() || q == Rat(1) || q == Rat(-1); }

// q in {0, 1, -1} has no Exact context; the reduced rational function is evaluated instead.
Rat exact_at(const ScalarFn& f, const Rat& q) {
  if (degenerate_q(q)) return f(Context::symbolic()).eval(q);
  return f(Context::exact(q)).exact();
}

Outcome exact_or_symbolic(const Args& a, const std::string& mode, const ScalarFn& f) {
  Outcome o;
  if (mode == "symbolic") {
    o.value = to_json(f(Context::symbolic()));
    return o;
  }
  const Rat q = a.rat("q");
  if (degenerate_q(q)) o.meta["via"] = "symbolic";
  o.value = to_json(exact_at(f, q));
  return o;
}

Json valuations_json(const std::vector<std::optional<long>>& vals) {
  Json j = Json::array();
  for (const auto& v : vals) {
    if (v) j.push_back(*v);
    else j.push_back("inf");
  }
  return j;
}

// value = scale * S_N; residual valuations are those of value - target.
Outcome padic_outcome(const QBracketMonomial& f, const Rat& scale, const Rat& target, const Rat& q,
                      const Config& cfg) {
  std::vector<long> levels;
  for (long n = 1; n <= cfg.N; ++n) levels.push_back(n);
  ValuationReport rep;
  rep.levels = levels;
  Rat value;
  if (scale.is_zero()) {
    for (std::size_t i = 0; i < levels.size(); ++i) rep.valuations.push_back(valuation(target, cfg.p));
  } else {
    rep = padic_limit_check(f, target / scale, q, cfg.p, levels, cfg.term_budget);
    const long shift = valuation(scale, cfg.p).value_or(0);
    for (auto& v : rep.valuations) {
      if (v) *v += shift;
    }
    value = scale * fermionic_sum(f, q, PadicParams{cfg.p, cfg.N, cfg.term_budget});
  }
  rep.verdict = valuation_verdict(rep.levels, rep.valuations);
  Outcome o;
  o.value = to_json(value);
  o.meta["p"] = cfg.p;
  o.meta["N"] = cfg.N;
  o.meta["target"] = to_json(target);
  o.meta["levels"] = levels;
  o.meta["valuations"] = valuations_json(rep.valuations);
  o.meta["verdict"] = rep.verdict;
  return o;
}

Outcome series_outcome(const SeriesValue& s, const Rat& scale, SummationMode mode,
                       const std::optional<Rat>& closed) {
  Outcome o;
  o.value = to_json(scale * s.value);
  o.meta["truncation"] = s.terms;
  o.meta["summation"] = mode == SummationMode::Cesaro1 ? "cesaro1" : "direct";
  o.meta["tail_bound"] = to_json(scale.abs() * s.tail_bound);
  if (closed) o.meta["closed_form"] = to_json(*closed);
  return o;
}

SeriesParams series_params(const Config& cfg, SummationMode mode) {
  SeriesParams sp;
  sp.M = cfg.M;
  sp.mode = mode;
  sp.cesaro_tolerance = cfg.cesaro_tolerance;
  return sp;
}

SummationMode boundary_mode(const Rat& w) {
  return w.abs() == Rat(1) ? SummationMode::Cesaro1 : SummationMode::Direct;
}

Outcome run_qeuler(const Args& a, const std::string& mode, const Config& cfg) {
  QEulerSpec s{a.integer("m"), a.integer_or("h", 1), a.integer_or("k", 1), a.integer_or("x", 0),
               a.rat_or("w", Rat(1))};
  ScalarFn closed = [s](const Context& c) { return qeuler_hk(s, c); };
  if (mode == "exact" || mode == "symbolic") return exact_or_symbolic(a, mode, closed);
  const Rat q = a.rat("q");
  const QBracketMonomial f{s.m, s.k, s.h, s.w, s.x};
  if (mode == "padic") return padic_outcome(f, Rat(1), exact_at(closed, q), q, cfg);
  if (s.h == s.k - 1) {
    const auto m = boundary_mode(s.w);
    return series_outcome(qeuler_twisted_hk_series(s, q, series_params(cfg, m)), Rat(1), m,
                          exact_at(closed, q));
  }
  return series_outcome(real_series(f, q, series_params(cfg, SummationMode::Direct)), Rat(1),
                        SummationMode::Direct, exact_at(closed, q));
}

Outcome run_qgenocchi(const Args& a, const std::string& mode, const Config& cfg) {
  const long n = a.integer("n");
  const Rat w = a.rat_or("w", Rat(1));
  const bool hk = a.has("h") || a.has("k");
  const long h = a.integer_or("h", 1), k = a.integer_or("k", 1);
  if (n < 0) throw UsageError("--n must be >= 0");
  ScalarFn closed;
  Rat scale;
  QBracketMonomial f;
  if (hk) {
    closed = [=](const Context& c) { return qgenocchi_hk(QGenocchiSpec{n, h, k, w}, c); };
    if (k >= 1) scale = Rat(BigInt(factorial(k) * binomial(n + k, k)));
    f = QBracketMonomial{n, k, h, w, 0};
  } else {
    closed = [=](const Context& c) { return qgenocchi_twisted(n, w, c); };
    scale = Rat(n);
    f = QBracketMonomial{std::max(n - 1, 0L), 1, 1, w, 0};
  }
  if (mode == "exact" || mode == "symbolic") return exact_or_symbolic(a, mode, closed);
  const Rat q = a.rat("q");
  const Rat target = exact_at(closed, q);
  if (mode == "padic") return padic_outcome(f, scale, target, q, cfg);
  if (hk && h == k - 1) {
    const auto m = boundary_mode(w);
    return series_outcome(qgenocchi_hk_series(QGenocchiSpec{n, h, k, w}, q, series_params(cfg, m)),
                          Rat(1), m, target);
  }
  if (scale.is_zero()) return series_outcome(SeriesValue{Rat(0), Rat(0), 0}, scale,
                                             SummationMode::Direct, target);
  return series_outcome(real_series(f, q, series_params(cfg, SummationMode::Direct)), scale,
                        SummationMode::Direct, target);
}

Outcome run_gf(const Args& a, const Config& cfg) {
  const std::string kind_text = a.text("kind");
  GfKind kind;
  if (kind_text == "F_qk") kind = GfKind::F_qk;
  else if (kind_text == "h_qk") kind = GfKind::h_qk;
  else if (kind_text == "h_qkw") kind = GfKind::h_qkw;
  else throw UsageError("--kind must be one of F_qk, h_qk, h_qkw");
  const Rat w = kind == GfKind::h_qk ? Rat(1) : a.rat_or("w", Rat(1));
  const long terms = a.integer_or("terms", 8);
  GfValue g = gf_eval(kind, a.integer_or("k", 1), a.integer_or("x", 0), w, a.rat("q"), a.rat("t"),
                      series_params(cfg, boundary_mode(w)), terms);
  Outcome o;
  o.value = Json::object();
  o.value["lhs"] = to_json(g.lhs);
  o.value["rhs"] = to_json(g.rhs);
  Json coeffs = Json::array();
  for (const Rat& c : g.rhs_coeffs) coeffs.push_back(to_json(c));
  o.meta["truncation"] = cfg.M;
  o.meta["summation"] = boundary_mode(w) == SummationMode::Cesaro1 ? "cesaro1" : "direct";
  o.meta["t_terms"] = terms;
  o.meta["rhs_coefficients"] = coeffs;
  return o;
}

Outcome dispatch(const Query& query, const Args& a, const Config& cfg) {
  const std::string& fam = query.family;
  const std::string& mode = query.mode;
  if (fam == "qnum") {
    const long n = a.integer("n");
    return exact_or_symbolic(a, mode, [n](const Context& c) { return q_int(n, c); });
  }
  if (fam == "qbinom") {
    const long n = a.integer("n"), k = a.integer("k");
    return exact_or_symbolic(a, mode, [n, k](const Context& c) { return gauss_binom(n, k, c); });
  }
  Outcome o;
  if (fam == "euler") {
    const long n = a.integer("n"), r = a.integer_or("r", 1);
    XPoly p = higher_euler_poly(n, r);
    o.value = query.poly ? to_json(p) : to_json(p.eval(a.rat_or("x", Rat(0))));
    return o;
  }
  if (fam == "genocchi") {
    const long n = a.integer("n"), r = a.integer_or("r", 1);
    if (r != 1 && (query.poly || a.has("x"))) {
      throw UsageError("genocchi polynomials are available for r = 1 only");
    }
    if (query.poly) o.value = to_json(genocchi_poly(n));
    else if (a.has("x")) o.value = to_json(genocchi_poly(n).eval(a.rat("x")));
    else o.value = to_json(r == 1 ? genocchi(n) : higher_genocchi(n, r));
    return o;
  }
  if (fam == "bernoulli") {
    o.value = to_json(bernoulli(a.integer("n")));
    return o;
  }
  if (fam == "frobenius") {
    const long n = a.integer("n");
    const Rat u = a.rat("u");
    if (query.poly) o.value = to_json(frobenius_euler_poly(n, u));
    else if (a.has("x")) o.value = to_json(frobenius_euler_poly(n, u).eval(a.rat("x")));
    else o.value = to_json(frobenius_euler(n, u));
    return o;
  }
  if (fam == "qeuler") return run_qeuler(a, mode, cfg);
  if (fam == "qgenocchi") return run_qgenocchi(a, mode, cfg);
  if (fam == "twisted-euler") {
    const long n = a.integer("n");
    const Rat w = a.rat("w");
    ScalarFn closed = [n, w](const Context& c) { return qeuler_twisted(n, w, c); };
    if (mode == "series") {
      const Rat q = a.rat("q");
      return series_outcome(real_series(QBracketMonomial{n, 1, 1, w, 0}, q,
                                        series_params(cfg, SummationMode::Direct)),
                            Rat(1), SummationMode::Direct, exact_at(closed, q));
    }
    if (mode == "exact" && !a.has("q")) {
      o.value = to_json(twisted_euler_classical(n, w));
      return o;
    }
    return exact_or_symbolic(a, mode, closed);
  }
  if (fam == "twisted-genocchi") {
    const long n = a.integer("n");
    const Rat w = a.rat("w");
    if (mode == "exact" && !a.has("q")) {
      o.value = to_json(n == 0 ? Rat(0) : Rat(n) * twisted_euler_classical(n - 1, w));
      return o;
    }
    return exact_or_symbolic(a, mode, [n, w](const Context& c) { return qgenocchi_twisted(n, w, c); });
  }
  return run_gf(a, cfg);
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, info] : families()) v.push_back(name);
    return v;
  }();
  return names;
}

const std::vector<std::string>& parameter_names() {
  static const std::vector<std::string> names = {"n", "m", "h", "k", "x", "q", "w", "u",
                                                 "r", "t", "p", "N", "M", "terms", "kind"};
  return names;
}

const std::vector<std::string>& family_parameters(const std::string& family) {
  auto it = families().find(family);
  if (it == families().end()) throw UsageError("unknown family '" + family + "'");
  return it->second.params;
}

Json run_query(const Query& query, const Config& config) {
  auto it = families().find(query.family);
  if (it == families().end()) throw UsageError("unknown family '" + query.family + "'");
  const FamilyInfo& info = it->second;
  if (!contains(info.modes, query.mode)) {
    throw UsageError("mode '" + query.mode + "' is not available for " + query.family);
  }
  if (query.poly && !info.poly) throw UsageError("--poly is not available for " + query.family);
  for (const auto& [name, value] : query.params) {
    if (!contains(info.params, name)) {
      throw UsageError("--" + name + " is not a parameter of " + query.family);
    }
  }
  if (query.poly && query.params.count("x")) throw UsageError("--poly and --x are exclusive");

  const Args a(query);
  Config cfg = config;
  if (a.has("p")) {
    const long p = a.integer("p");
    if (p < 3 || !is_prime(p)) throw UsageError("--p must be an odd prime");
    cfg.p = static_cast<unsigned long>(p);
  }
  if (a.has("N")) cfg.N = a.integer("N");
  if (a.has("M")) cfg.M = a.integer("M");
  if (cfg.N < 1) throw UsageError("--N must be >= 1");
  if (cfg.M < 1) throw UsageError("--M must be >= 1");

  Json echo = Json::object();
  echo["family"] = query.family;
  for (const auto& name : parameter_names()) {
    auto p = query.params.find(name);
    if (p == query.params.end()) continue;
    echo[name] = name == "kind" ? Json(p->second) : to_json(a.rat(name));
  }
  if (query.poly) echo["poly"] = true;

  Outcome o = dispatch(query, a, cfg);
  Json out = Json::object();
  out["query"] = echo;
  out["mode"] = query.mode;
  out["value"] = o.value;
  out["meta"] = o.meta;
  return out;
}

}  // namespace qgen::cli
