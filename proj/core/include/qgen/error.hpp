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

#include <stdexcept>
#include <string>

namespace qgen {

/// Base of every mathematical-domain failure raised by the library. The CLI
/// maps this family to exit code 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A denominator factor vanished at the requested evaluation point.
class VanishingDenominator : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series was requested in a regime where it does not converge
/// (or converges only under a summation mode that was not selected).
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A brute-force evaluation would exceed the configured term budget.
class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qgen
