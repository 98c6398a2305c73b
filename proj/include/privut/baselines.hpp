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

#ifndef PRIVUT_BASELINES_HPP
#define PRIVUT_BASELINES_HPP

#include <cstdint>
#include <functional>

#include "privut/greedy.hpp"

namespace privut {

// Reference optimizers for comparison runs. Both work on the one-sided
// quadratic penalty of the delta budget and keep noise non-negative by the
// squared parameterization theta = s^2, so neither supports the
// gamma-constraint (CapabilityError if config.gamma != 0) and both use the
// mutual-information utility metric only.

struct PenaltyParams {
  double lambda = 10.0;         // initial penalty weight, >= 0
  double step_size = 1.0;       // > 0, halved by backtracking on increase
  double fd_step = 1e-4;        // finite-difference step, > 0
  std::size_t iters = 200;      // inner iterations per round, > 0
  double lambda_growth = 10.0;  // penalty multiplier per outer round, >= 1
  std::size_t outer_rounds = 5;

  void validate() const;
};

struct AnnealParams {
  double t0 = 0.0;             // initial temperature; 0 = |initial objective|
  double cooling = 0.9999;     // geometric factor in (0,1)
  double neighbor_scale = 0.0; // 0 = max diagonal of sigma_x
  std::size_t iters = 100'000;
  std::uint64_t seed = 1;

  void validate() const;
};

// Penalty weight the annealer applies to the delta budget.
inline constexpr double kAnnealPenaltyWeight = 1e4;

// I(Xp;Y) + lambda * max(0, utility_loss(theta) - delta)^2.
double penalized_objective(const CovarianceModel& model,
                           const NoiseAllocation& theta, double delta,
                           double lambda);

// Central differences (f(x+h e_i) - f(x-h e_i)) / 2h, falling back to a
// one-sided forward difference on components with theta_i < h so probe
// points never go negative.
std::vector<double> numeric_gradient(
    const std::function<double(const NoiseAllocation&)>& objective,
    const NoiseAllocation& theta, double fd_step);

// Penalty-method descent with numerically approximated gradients. The
// result is flagged Termination::infeasible when the final point misses the
// delta budget by more than 1e-6.
TradeoffResult gradient_descent(const CovarianceModel& model,
                                const TradeoffConfig& config,
                                const PenaltyParams& params);

// Metropolis annealing on the penalized objective: one uniformly chosen
// component gets a zero-mean Gaussian perturbation of scale
// neighbor_scale * T/t0 (clipped at zero), geometric cooling, best-seen
// point returned. Deterministic for a fixed seed.
TradeoffResult simulated_annealing(const CovarianceModel& model,
                                   const TradeoffConfig& config,
                                   const AnnealParams& params);

}  // namespace privut

#endif  // PRIVUT_BASELINES_HPP
