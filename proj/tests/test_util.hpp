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

// Test-only helpers: an independent cofactor-expansion determinant oracle
// (deliberately not sharing any code with the Cholesky path it checks),
// naive information measures built on it, and random model generators.

#ifndef PRIVUT_TESTS_TEST_UTIL_HPP
#define PRIVUT_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <random>

#include "privut/covmodel.hpp"
#include "privut/matrix.hpp"

namespace privut::testutil {

// Determinant by first-row cofactor expansion. Exponential in the
// dimension; fine for the d <= 8 matrices the tests use.
inline double cofactor_det(const Matrix& a) {
  const std::size_t k = a.rows();
  if (k == 1) return a(0, 0);
  if (k == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  double total = 0.0;
  double sign = 1.0;
  for (std::size_t j = 0; j < k; ++j) {
    Matrix minor(k - 1, k - 1);
    for (std::size_t r = 1; r < k; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < k; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    total += sign * a(0, j) * cofactor_det(minor);
    sign = -sign;
  }
  return total;
}

inline Matrix with_noise(const Matrix& m, const std::vector<double>& theta,
                         std::size_t n) {
  Matrix out = m;
  for (std::size_t i = 0; i < n; ++i) out(i, i) += theta[i];
  return out;
}

// I(Xq;Y) through raw cofactor determinants: 0.5*ln(|S_q|*|S_Y|/|S_{Y u q}|).
inline double oracle_mi(const Matrix& sigma_x, const Matrix& sigma_x_xq,
                        const std::vector<double>& theta) {
  const std::size_t n = sigma_x.rows();
  const std::size_t q = sigma_x_xq.rows() - n;
  const double det_q = cofactor_det(sigma_x_xq.trailing_block(q));
  const double det_y = cofactor_det(with_noise(sigma_x, theta, n));
  const double det_yq = cofactor_det(with_noise(sigma_x_xq, theta, n));
  return 0.5 * std::log(det_q * det_y / det_yq);
}

inline double oracle_mi_private(const CovarianceModel& m,
                                const NoiseAllocation& theta) {
  return oracle_mi(m.sigma_x, m.sigma_x_xp, theta.theta);
}

inline double oracle_mi_utility(const CovarianceModel& m,
                                const NoiseAllocation& theta) {
  return oracle_mi(m.sigma_x, m.sigma_x_xu, theta.theta);
}

// A random valid model: draw a full (n+n_p+n_u)-dimensional covariance as
// G G^T + 0.5 I with N(0,1) entries in G, then carve out the [X; Xp] and
// [X; Xu] blocks. Principal submatrices of an SPD matrix stay SPD.
inline CovarianceModel random_model(std::mt19937_64& gen, std::size_t n,
                                    std::size_t n_p, std::size_t n_u,
                                    double scale = 1.0) {
  const std::size_t d = n + n_p + n_u;
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = scale * normal(gen);
  Matrix full(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      double acc = i == j ? 0.5 * scale * scale : 0.0;
      for (std::size_t k = 0; k < d; ++k) acc += g(i, k) * g(j, k);
      full(i, j) = acc;
      full(j, i) = acc;
    }
  }
  auto take = [&](std::size_t tail_off, std::size_t tail_len) {
    Matrix out(n + tail_len, n + tail_len);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) idx.push_back(i);
    for (std::size_t i = 0; i < tail_len; ++i) idx.push_back(tail_off + i);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        out(i, j) = full(idx[i], idx[j]);
    return out;
  };
  CovarianceModel model;
  model.n = n;
  model.n_p = n_p;
  model.n_u = n_u;
  model.sigma_x = full.leading_block(n);
  model.sigma_x_xp = take(n, n_p);
  model.sigma_x_xu = take(n + n_p, n_u);
  return model;
}

inline CovarianceModel random_model(std::mt19937_64& gen,
                                    std::size_t max_n = 6) {
  std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
  return random_model(gen, pick_n(gen), 1, 1);
}

inline NoiseAllocation random_theta(std::mt19937_64& gen, std::size_t n,
                                    double max_value = 10.0) {
  std::uniform_real_distribution<double> u(0.0, max_value);
  NoiseAllocation theta = NoiseAllocation::zeros(n);
  for (std::size_t i = 0; i < n; ++i) theta.theta[i] = u(gen);
  return theta;
}

// A model whose private (or utility) feature is independent of X: the
// cross-covariance block is exactly zero.
inline CovarianceModel independent_tail_model(bool private_independent,
                                              bool utility_independent) {
  CovarianceModel model;
  model.n = 2;
  model.n_p = 1;
  model.n_u = 1;
  model.sigma_x = Matrix{{4.0, 1.2}, {1.2, 3.0}};
  const double cp = private_independent ? 0.0 : 1.1;
  const double cu = utility_independent ? 0.0 : 0.9;
  model.sigma_x_xp =
      Matrix{{4.0, 1.2, cp}, {1.2, 3.0, 0.0}, {cp, 0.0, 2.0}};
  model.sigma_x_xu =
      Matrix{{4.0, 1.2, 0.0}, {1.2, 3.0, cu}, {0.0, cu, 1.5}};
  return model;
}

}  // namespace privut::testutil

#endif  // PRIVUT_TESTS_TEST_UTIL_HPP
