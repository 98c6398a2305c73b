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

#ifndef PRIVUT_GAUSS_INFO_HPP
#define PRIVUT_GAUSS_INFO_HPP

#include "privut/covmodel.hpp"

namespace privut {

// All information quantities are in nats (natural log). Mutual-information
// round-off in [-1e-9, 0) is clamped to 0; anything more negative raises
// NumericalError. No jitter is ever added to a near-singular matrix; the
// DefinitenessError surfaces to the caller.
inline constexpr double kMiRoundoffTol = 1e-9;

// The three quantities of a single tradeoff point.
struct InfoPoint {
  double i_xp_y = 0.0;        // leakage I(Xp;Y)
  double i_xu_y = 0.0;        // retained utility I(Xu;Y)
  double utility_loss = 0.0;  // I(Xu;X) - I(Xu;Y)
};

// Differential entropy of a k-variate Gaussian with covariance `cov`:
// 0.5*(k*ln(2*pi*e) + log|cov|).
double gaussian_entropy(const Matrix& cov);

// I(Xp;Y) = 0.5*(log|S_Xp| + log|S_Y| - log|S_{Y u Xp}|).
double mi_private(const CovarianceModel& model, const NoiseAllocation& theta);

// I(Xu;Y), same shape with the utility block.
double mi_utility(const CovarianceModel& model, const NoiseAllocation& theta);

// I(Xu;X) - I(Xu;Y) = 0.5*(log|S_X| - log|S_{X u Xu}| - log|S_Y|
//                          + log|S_{Y u Xu}|).
double utility_loss(const CovarianceModel& model, const NoiseAllocation& theta);

InfoPoint info_point(const CovarianceModel& model,
                     const NoiseAllocation& theta);

}  // namespace privut

#endif  // PRIVUT_GAUSS_INFO_HPP
