// Copyright 2026 The splitcert Authors
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

#ifndef SPLITCERT_ERRORS_HPP_
#define SPLITCERT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace splitcert {

/// Base class for all splitcert exceptions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shapes of operands do not conform (structural, not an assumption failure).
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A matrix required to be symmetric is asymmetric beyond tolerance.
class SymmetryError : public Error {
 public:
  explicit SymmetryError(const std::string& what) : Error(what) {}
};

/// A linear system is singular or numerically rank-deficient.
class SingularSystemError : public Error {
 public:
  explicit SingularSystemError(const std::string& what) : Error(what) {}
};

/// A scalar parameter is out of its admissible range (e.g. rho <= 0).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error(what) {}
};

/// A constraint set turned out to be empty.
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what) : Error(what) {}
};

/// An iteration budget was exhausted before termination.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

/// An instance exceeds a brute-force enumeration cap.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

/// A problem or manifest file could not be parsed against its schema.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace splitcert

#endif  // SPLITCERT_ERRORS_HPP_
