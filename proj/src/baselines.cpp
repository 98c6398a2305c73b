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

#include "privut/baselines.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace privut {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_baseline_compatible(const TradeoffConfig& config,
                                 const char* name) {
  if (config.gamma != 0.0) {
    throw CapabilityError(std::string(name) +
                          " is not compatible with the gamma-constraint; "
                          "use the greedy mechanism for gamma > 0");
  }
  if (config.utility_metric != UtilityMetric::mutual_information) {
    throw CapabilityError(std::string(name) +
                          " supports the mutual-information utility metric "
                          "only");
  }
}

double ratio_or_inf(double gain, double loss) {
  return loss < kRatioFloor ? kInf : gain / loss;
}

// Shared epilogue: evaluate the final point, run the feasibility check, and
// fill the result fields common to both baselines.
void finalize(const CovarianceModel& model, const TradeoffConfig& config,
              NoiseAllocation theta, std::size_t iterations,
              TradeoffResult& result) {
  result.theta = std::move(theta);
  result.iterations = iterations;
  result.point = info_point(model, result.theta);
  const double i_xp_zero = mi_private(model, NoiseAllocation::zeros(model.n));
  result.cumulative_ratio = ratio_or_inf(i_xp_zero - result.point.i_xp_y,
                                         result.point.utility_loss);
  result.termination = result.point.utility_loss <= config.delta + 1e-6
                           ? Termination::converged
                           : Termination::infeasible;
}

}  // namespace

void PenaltyParams::validate() const {
  if (!(lambda >= 0.0)) throw UsageError("penalty lambda must be >= 0");
  if (!(step_size > 0.0)) throw UsageError("step_size must be > 0");
  if (!(fd_step > 0.0)) throw UsageError("fd_step must be > 0");
  if (iters == 0) throw UsageError("iters must be > 0");
  if (!(lambda_growth >= 1.0)) throw UsageError("lambda_growth must be >= 1");
  if (outer_rounds == 0) throw UsageError("outer_rounds must be >= 1");
}

void AnnealParams::validate() const {
  if (!(t0 >= 0.0)) throw UsageError("t0 must be >= 0");
  if (!(cooling > 0.0 && cooling < 1.0)) {
    throw UsageError("cooling must lie in (0,1)");
  }
  if (!(neighbor_scale >= 0.0)) throw UsageError("neighbor_scale must be >= 0");
  if (iters == 0) throw UsageError("iters must be > 0");
}

double penalized_objective(const CovarianceModel& model,
                           const NoiseAllocation& theta, double delta,
                           double lambda) {
  const double excess = utility_loss(model, theta) - delta;
  const double penalty = excess > 0.0 ? lambda * excess * excess : 0.0;
  return mi_private(model, theta) + penalty;
}

std::vector<double> numeric_gradient(
    const std::function<double(const NoiseAllocation&)>& objective,
    const NoiseAllocation& theta, double fd_step) {
  if (!(fd_step > 0.0)) throw UsageError("fd_step must be > 0");
  const std::size_t n = theta.theta.size();
  std::vector<double> grad(n);
  NoiseAllocation probe = theta;
  for (std::size_t i = 0; i < n; ++i) {
    const double base = theta.theta[i];
    if (base < fd_step) {
      // One-sided forward difference keeps the probe non-negative.
      const double f0 = objective(theta);
      probe.theta[i] = base + fd_step;
      grad[i] = (objective(probe) - f0) / fd_step;
    } else {
      probe.theta[i] = base + fd_step;
      const double fplus = objective(probe);
      probe.theta[i] = base - fd_step;
      grad[i] = (fplus - objective(probe)) / (2.0 * fd_step);
    }
    probe.theta[i] = base;
  }
  return grad;
}

TradeoffResult gradient_descent(const CovarianceModel& model,
                                const TradeoffConfig& config,
                                const PenaltyParams& params) {
  config.validate();
  params.validate();
  require_baseline_compatible(config, "gradient descent");

  const std::size_t n = model.n;
  // theta = s^2 keeps the noise non-negative. s = 0 is a stationary point
  // of the composition (the chain rule zeroes the gradient there), so the
  // descent starts from a small positive allocation instead.
  std::vector<double> s(n, std::sqrt(0.01 * max_abs_diagonal(model.sigma_x)));
  auto theta_of = [&](const std::vector<double>& v) {
    NoiseAllocation theta = NoiseAllocation::zeros(n);
    for (std::size_t i = 0; i < n; ++i) theta.theta[i] = v[i] * v[i];
    return theta;
  };

  TradeoffResult result;
  std::size_t iterations = 0;
  double lambda = params.lambda;
  const double i_xp_zero = mi_private(model, NoiseAllocation::zeros(n));
  double traced_i_xp = i_xp_zero;
  double traced_loss = 0.0;

  for (std::size_t round = 0; round < params.outer_rounds; ++round) {
    auto objective = [&](const std::vector<double>& v) {
      return penalized_objective(model, theta_of(v), config.delta, lambda);
    };
    double step = params.step_size;
    double current = objective(s);
    for (std::size_t it = 0; it < params.iters; ++it) {
      ++iterations;
      // Central differences in s-space; s is unconstrained so no boundary
      // handling is needed here.
      std::vector<double> grad(n);
      std::vector<double> probe = s;
      double grad_norm2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        probe[i] = s[i] + params.fd_step;
        const double fplus = objective(probe);
        probe[i] = s[i] - params.fd_step;
        grad[i] = (fplus - objective(probe)) / (2.0 * params.fd_step);
        probe[i] = s[i];
        grad_norm2 += grad[i] * grad[i];
      }
      if (grad_norm2 < 1e-24) break;

      std::vector<double> next(n);
      double next_value = kInf;
      bool moved = false;
      for (int halvings = 0; halvings <= 30; ++halvings) {
        for (std::size_t i = 0; i < n; ++i) next[i] = s[i] - step * grad[i];
        next_value = objective(next);
        if (next_value <= current) {
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
      s = next;
      current = next_value;
    }
    // One trace row per outer round, in MI units.
    const NoiseAllocation theta = theta_of(s);
    const double i_xp = mi_private(model, theta);
    const double loss = utility_loss(model, theta);
    result.trace.push_back(TraceStep{iterations, -1, step,
                                     traced_i_xp - i_xp, loss - traced_loss,
                                     ratio_or_inf(traced_i_xp - i_xp,
                                                  loss - traced_loss),
                                     i_xp, loss});
    traced_i_xp = i_xp;
    traced_loss = loss;
    lambda *= params.lambda_growth;
  }

  // The quadratic penalty leaves a small budget overrun at any finite
  // lambda. Utility loss is monotone under scaling the allocation toward
  // zero, so a bisection on the scale factor restores feasibility. The
  // target backs off to 99.9% of the budget: a numeric-gradient penalty
  // method cannot resolve the boundary tighter than that anyway, and
  // sitting on it exactly would just be boundary chatter.
  NoiseAllocation theta = theta_of(s);
  const double loss_target = config.delta * (1.0 - 1e-3);
  if (utility_loss(model, theta) > loss_target) {
    double feasible = 0.0, excess = 1.0;
    for (int it = 0; it < 100 && excess - feasible > 1e-15; ++it) {
      const double mid = 0.5 * (feasible + excess);
      NoiseAllocation scaled = theta;
      for (double& v : scaled.theta) v *= mid;
      if (utility_loss(model, scaled) <= loss_target) {
        feasible = mid;
      } else {
        excess = mid;
      }
    }
    for (double& v : theta.theta) v *= feasible;
  }

  finalize(model, config, std::move(theta), iterations, result);
  return result;
}

TradeoffResult simulated_annealing(const CovarianceModel& model,
                                   const TradeoffConfig& config,
                                   const AnnealParams& params) {
  config.validate();
  params.validate();
  require_baseline_compatible(config, "simulated annealing");

  const std::size_t n = model.n;
  NoiseAllocation theta = NoiseAllocation::zeros(n);
  auto objective = [&](const NoiseAllocation& t) {
    return penalized_objective(model, t, config.delta, kAnnealPenaltyWeight);
  };

  double current = objective(theta);
  const double t0 =
      params.t0 > 0.0 ? params.t0 : std::max(std::abs(current), 1e-3);
  const double scale = params.neighbor_scale > 0.0
                           ? params.neighbor_scale
                           : max_abs_diagonal(model.sigma_x);

  std::mt19937_64 gen(params.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::normal_distribution<double> perturb(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  NoiseAllocation best = theta;
  double best_value = current;
  double traced_i_xp = mi_private(model, NoiseAllocation::zeros(n));
  double traced_loss = 0.0;

  TradeoffResult result;
  double temperature = t0;
  for (std::size_t it = 0; it < params.iters; ++it) {
    const std::size_t i = pick(gen);
    NoiseAllocation candidate = theta;
    candidate.theta[i] = std::max(
        0.0, candidate.theta[i] + perturb(gen) * scale * temperature / t0);
    const double value = objective(candidate);
    const double diff = value - current;
    if (diff <= 0.0 ||
        unit(gen) < std::exp(-diff / std::max(temperature, 1e-300))) {
      theta = std::move(candidate);
      current = value;
      if (current < best_value) {
        best = theta;
        best_value = current;
        const double i_xp = mi_private(model, best);
        const double loss = utility_loss(model, best);
        result.trace.push_back(TraceStep{
            it + 1, static_cast<int>(i), temperature, traced_i_xp - i_xp,
            loss - traced_loss,
            ratio_or_inf(traced_i_xp - i_xp, loss - traced_loss), i_xp, loss});
        traced_i_xp = i_xp;
        traced_loss = loss;
      }
    }
    temperature *= params.cooling;
  }

  finalize(model, config, std::move(best), params.iters, result);
  return result;
}

}  // namespace privut
