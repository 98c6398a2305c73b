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

#include "privut/fisher_info.hpp"

#include <cmath>
#include <string>

#include "privut/cholesky.hpp"
#include "privut/gauss_info.hpp"

namespace privut {
namespace {

void require_scalar_utility(const CovarianceModel& model, const char* what) {
  if (model.n_u != 1) {
    throw UsageError(std::string(what) + " requires n_u = 1, got n_u = " +
                     std::to_string(model.n_u));
  }
}

}  // namespace

FisherMatrix fisher_matrix(const CovarianceModel& model,
                           const NoiseAllocation& theta) {
  const NoisyCovariances noisy = noisy_covariances(model, theta);
  const Matrix a = Cholesky::decompose(model.sigma_xu()).inverse();
  const Matrix b = Cholesky::decompose(noisy.sigma_y_xu).inverse();
  const std::size_t n = model.n, n_u = model.n_u;
  Matrix h(n_u, n_u);
  for (std::size_t i = 0; i < n_u; ++i) {
    h(i, i) = b(n + i, n + i) - a(i, i);
    for (std::size_t j = i + 1; j < n_u; ++j) {
      h(i, j) = 0.5 * (b(n + i, n + j) + b(n + j, n + i) - a(i, j) - a(j, i));
      h(j, i) = h(i, j);
    }
  }
  return FisherMatrix{std::move(h)};
}

double fisher_scalar(const CovarianceModel& model,
                     const NoiseAllocation& theta) {
  require_scalar_utility(model, "fisher_scalar");
  const NoisyCovariances noisy = noisy_covariances(model, theta);
  const Matrix b = Cholesky::decompose(noisy.sigma_y_xu).inverse();
  const double sigma2 = model.sigma_x_xu(model.n, model.n);
  return b(model.n, model.n) - 1.0 / sigma2;
}

CofactorIdentity cofactor_identity_check(const CovarianceModel& model,
                                         const NoiseAllocation& theta) {
  require_scalar_utility(model, "cofactor_identity_check");
  const NoisyCovariances noisy = noisy_covariances(model, theta);
  const Matrix b = Cholesky::decompose(noisy.sigma_y_xu).inverse();
  const double rhs =
      std::exp(log_det(noisy.sigma_y) - log_det(noisy.sigma_y_xu));
  return CofactorIdentity{b(model.n, model.n), rhs};
}

double mi_from_fisher(double sigma2_xu, double fisher) {
  if (!(sigma2_xu > 0.0)) {
    throw UsageError("utility variance must be positive, got " +
                     std::to_string(sigma2_xu));
  }
  if (fisher < -kMiRoundoffTol) {
    throw NumericalError("Fisher information " + std::to_string(fisher) +
                         " is more negative than the round-off tolerance");
  }
  const double clamped = std::max(fisher, 0.0);
  return 0.5 * std::log1p(sigma2_xu * clamped);
}

double fisher_threshold_from_delta(const CovarianceModel& model,
                                   double delta) {
  require_scalar_utility(model, "fisher_threshold_from_delta");
  const double i_xu_x = mi_utility(model, NoiseAllocation::zeros(model.n));
  if (!(delta >= 0.0) || delta > i_xu_x) {
    throw UsageError("delta must lie in [0, I(Xu;X) = " +
                     std::to_string(i_xu_x) + "], got " +
                     std::to_string(delta));
  }
  const double sigma2 = model.sigma_x_xu(model.n, model.n);
  return std::expm1(2.0 * (i_xu_x - delta)) / sigma2;
}

}  // namespace privut
