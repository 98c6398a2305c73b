//
// Copyright 2026 The Privut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef PRIVUT_ERRORS_HPP
#define PRIVUT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace privut {

// Error categories, mirrored by the CLI exit codes (usage = 1,
// validation = 2, numerical = 3, capability = 4).
enum class ErrorCategory { usage, validation, numerical, capability };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

// Shape/argument problems: wrong vector length, inconsistent declared
// dimensions, malformed input files, unknown names.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what)
      : Error(ErrorCategory::usage, what) {}
};

// A model (or estimated model) violates its invariants. The offending
// details live in the attached ValidationReport text.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCategory::validation, what) {}
};

// A symmetric factorization failed: the input is not positive definite.
class DefinitenessError : public Error {
 public:
  DefinitenessError(std::size_t pivot, const std::string& what)
      : Error(ErrorCategory::numerical, what), pivot_(pivot) {}
  // Index of the first non-positive pivot (0-based).
  std::size_t pivot() const { return pivot_; }

 private:
  std::size_t pivot_;
};

// A computed quantity is inconsistent beyond round-off (e.g. an MI value
// below -1e-9).
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(ErrorCategory::numerical, what) {}
};

// The requested combination is declared unsupported (e.g. gradient descent
// with a nonzero gamma-constraint).
class CapabilityError : public Error {
 public:
  explicit CapabilityError(const std::string& what)
      : Error(ErrorCategory::capability, what) {}
};

}  // namespace privut

#endif  // PRIVUT_ERRORS_HPP
