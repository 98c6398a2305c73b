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

#ifndef PRIVUT_CHOLESKY_HPP
#define PRIVUT_CHOLESKY_HPP

#include <vector>

#include "privut/matrix.hpp"

namespace privut {

// Lower-triangular Cholesky factor L of a symmetric positive-definite
// matrix (A = L L^T). This is the single numerical path behind every
// log-determinant and inverse in the library, so definiteness failures
// surface identically everywhere: a non-positive pivot at index i raises
// DefinitenessError{i}.
class Cholesky {
 public:
  static Cholesky decompose(const Matrix& a);

  std::size_t dim() const { return factor_.rows(); }
  const Matrix& factor() const { return factor_; }

  // log |A| = 2 * sum_i log L(i,i). Never forms the raw determinant.
  double log_det() const;

  // Solves A x = b in place (forward then transposed-back substitution).
  void solve_in_place(std::vector<double>& b) const;

  // A^{-1}, symmetric.
  Matrix inverse() const;

 private:
  explicit Cholesky(Matrix factor) : factor_(std::move(factor)) {}
  Matrix factor_;
};

// Convenience wrapper: log-determinant of a symmetric PD matrix.
double log_det(const Matrix& a);

}  // namespace privut

#endif  // PRIVUT_CHOLESKY_HPP
