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

#include "privut/gauss_info.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "privut/cholesky.hpp"

namespace privut {
namespace {

double clamp_roundoff(double v, const char* what) {
  if (v >= 0.0) return v;
  if (v >= -kMiRoundoffTol) return 0.0;
  throw NumericalError(std::string(what) + " came out " + std::to_string(v) +
                       ", more negative than the round-off tolerance");
}

}  // namespace

double gaussian_entropy(const Matrix& cov) {
  const double k = static_cast<double>(cov.rows());
  return 0.5 * (k * std::log(2.0 * std::numbers::pi * std::numbers::e) +
                log_det(cov));
}

double mi_private(const CovarianceModel& model, const NoiseAllocation& theta) {
  const NoisyCovariances noisy = noisy_covariances(model, theta);
  const double value = 0.5 * (log_det(model.sigma_xp()) +
                              log_det(noisy.sigma_y) -
                              log_det(noisy.sigma_y_xp));
  return clamp_roundoff(value, "I(Xp;Y)");
}

double mi_utility(const CovarianceModel& model, const NoiseAllocation& theta) {
  const NoisyCovariances noisy = noisy_covariances(model, theta);
  const double value = 0.5 * (log_det(model.sigma_xu()) +
                              log_det(noisy.sigma_y) -
                              log_det(noisy.sigma_y_xu));
  return clamp_roundoff(value, "I(Xu;Y)");
}

double utility_loss(const CovarianceModel& model,
                    const NoiseAllocation& theta) {
  const NoisyCovariances noisy = noisy_covariances(model, theta);
  const double value =
      0.5 * (log_det(model.sigma_x) - log_det(model.sigma_x_xu) -
             log_det(noisy.sigma_y) + log_det(noisy.sigma_y_xu));
  return clamp_roundoff(value, "utility loss");
}

InfoPoint info_point(const CovarianceModel& model,
                     const NoiseAllocation& theta) {
  return InfoPoint{mi_private(model, theta), mi_utility(model, theta),
                   utility_loss(model, theta)};
}

}  // namespace privut
