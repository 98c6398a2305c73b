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

#ifndef PRIVUT_MATRIX_HPP
#define PRIVUT_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "privut/errors.hpp"

namespace privut {

// Dense row-major matrix of doubles. Rows are contiguous, which is what the
// factorization and solve kernels iterate over.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<double>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw UsageError("ragged matrix initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  bool operator==(const Matrix& other) const = default;

  // Leading k-by-k principal submatrix.
  Matrix leading_block(std::size_t k) const {
    Matrix out(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    return out;
  }

  // Trailing k-by-k principal submatrix.
  Matrix trailing_block(std::size_t k) const {
    Matrix out(k, k);
    const std::size_t off = rows_ - k;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(off + i, off + j);
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

inline bool all_finite(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j))) return false;
  return true;
}

inline double max_abs_diagonal(const Matrix& m) {
  double v = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) v = std::max(v, std::abs(m(i, i)));
  return v;
}

// (A + A^T)/2, the symmetry repair applied to estimated covariances.
inline Matrix symmetrized(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = 0.5 * (m(i, j) + m(j, i));
  return out;
}

}  // namespace privut

#endif  // PRIVUT_MATRIX_HPP
