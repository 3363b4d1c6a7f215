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

#include <cstddef>
#include <string>
#include <vector>

#include "qgen/cli/json_value.hpp"
#include "qgen/rat.hpp"

namespace qgen::cli {

struct PropertyResult {
  std::string suite;
  std::string name;
  long grid = 0;
  long failures = 0;
  std::string worst;
  std::vector<std::string> failing_points;

  bool passed() const { return failures == 0; }
};

struct VerifyConfig {
  unsigned long p = 3;
  long padic_level = 3;
  std::size_t term_budget = 100000;
  long series_M = 40;
  long cesaro_M = 400;
  Rat cesaro_tolerance{1, 1000};
};

const std::vector<std::string>& suite_names();

std::vector<PropertyResult> run_suite(const std::string& suite, const VerifyConfig& cfg);

std::string format_line(const PropertyResult& r);
Json report_json(const std::vector<PropertyResult>& results);

namespace props {

PropertyResult q_combinatorics(long n_exact, long n_recursion);
PropertyResult q_binomial_formula(long n_expand, long n_reciprocal, long order);
PropertyResult evaluation_homomorphism();

PropertyResult genocchi_bernoulli(long n_max);
PropertyResult genocchi_euler(long n_max);
PropertyResult euler_complementarity(long n_max);
PropertyResult odd_genocchi_vanish(long n_max);
PropertyResult order_one_reduction(long n_max);
PropertyResult frobenius_at_zero(long n_max);
PropertyResult higher_order_factorial(long n_max, long r_max);
PropertyResult twisted_euler_remark(long n_max);

PropertyResult measure_normalization(long level_max);
PropertyResult measure_distribution(long level_max);
PropertyResult shift_identity(long level_max);
PropertyResult series_tail_shrinks();

PropertyResult qeuler_padic_oracle(const VerifyConfig& cfg);
PropertyResult qeuler_real_oracle(long M, const Rat& bound_cap);
PropertyResult qeuler_boundary_series(const VerifyConfig& cfg);
PropertyResult qeuler_classical_limit();
PropertyResult qeuler_twist_reduction();
PropertyResult gf_structure(const VerifyConfig& cfg);

PropertyResult qgenocchi_index_shift(long M);
PropertyResult qgenocchi_padic_oracle(const VerifyConfig& cfg);
PropertyResult qgenocchi_real_oracle(long M, const Rat& bound_cap);
PropertyResult qgenocchi_boundary_series(const VerifyConfig& cfg);
PropertyResult qgenocchi_classical_limit();
PropertyResult genocchi_coefficient_forms(long n_max, long k_max);
PropertyResult qgenocchi_twist_continuity();
PropertyResult qgenocchi_unit();

PropertyResult twist_collapse();

}  // namespace props

}  // namespace qgen::cli
