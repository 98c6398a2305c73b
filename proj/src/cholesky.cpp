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

#include "privut/cholesky.hpp"

#include <cmath>
#include <string>

#include "privut/kernels.hpp"

namespace privut {

Cholesky Cholesky::decompose(const Matrix& a) {
  if (!a.square()) throw UsageError("cholesky: matrix must be square");
  const std::size_t n = a.rows();
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double* li = l.row(i);
    for (std::size_t j = 0; j < i; ++j) {
      const double s = kernels::dot(li, l.row(j), j);
      l(i, j) = (a(i, j) - s) / l(j, j);
    }
    const double d = a(i, i) - kernels::dot(li, li, i);
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw DefinitenessError(
          i, "matrix is not positive definite (pivot " + std::to_string(i) +
                 " = " + std::to_string(d) + ")");
    }
    l(i, i) = std::sqrt(d);
  }
  return Cholesky(std::move(l));
}

double Cholesky::log_det() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) acc += std::log(factor_(i, i));
  return 2.0 * acc;
}

void Cholesky::solve_in_place(std::vector<double>& b) const {
  const std::size_t n = dim();
  // L z = b
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = (b[i] - kernels::dot(factor_.row(i), b.data(), i)) / factor_(i, i);
  }
  // L^T x = z, column sweep so the inner update runs over a contiguous row.
  for (std::size_t i = n; i-- > 0;) {
    b[i] /= factor_(i, i);
    kernels::axpy(-b[i], factor_.row(i), b.data(), i);
  }
}

Matrix Cholesky::inverse() const {
  const std::size_t n = dim();
  Matrix inv(n, n);
  std::vector<double> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(col.begin(), col.end(), 0.0);
    col[j] = 1.0;
    solve_in_place(col);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  // The solves already produce a symmetric matrix up to round-off; make it
  // exact so downstream index conventions cannot observe an asymmetry.
  return symmetrized(inv);
}

double log_det(const Matrix& a) { return Cholesky::decompose(a).log_det(); }

}  // namespace privut
