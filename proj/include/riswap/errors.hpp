// Copyright 2026 The riswap Authors
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

namespace riswap {

// Shape mismatch between matrix operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates a documented precondition (Hermiticity, density matrix, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Matrix expected to be positive semidefinite has a negative eigenvalue.
class NotPsdError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A scheme parameter contradicts the constraint that defines the scheme.
class ConstraintViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Segment or sequence cannot be handled by the requested propagation mode.
class ModeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Integrator or sweep configuration is inconsistent.
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical integration lost unitarity beyond what re-projection may repair.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace riswap
