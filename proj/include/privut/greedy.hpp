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

#ifndef PRIVUT_GREEDY_HPP
#define PRIVUT_GREEDY_HPP

#include <string_view>
#include <vector>

#include "privut/gauss_info.hpp"

namespace privut {

enum class UtilityMetric { mutual_information, fisher_information };

std::string_view utility_metric_name(UtilityMetric metric);

// Cumulative ratios with a denominator below this are reported as +inf.
inline constexpr double kRatioFloor = 1e-12;

// Knobs of the greedy mechanism. In mutual-information mode `delta` is the
// utility-loss budget in nats; in Fisher mode it is the lower bound the
// Fisher information must keep (map an MI budget through
// fisher_threshold_from_delta). `gamma` is always in the units of the
// selected metric: nats-per-nat in MI mode, nats-per-Fisher-unit in Fisher
// mode. There is no automatic conversion between the two scales.
struct TradeoffConfig {
  double delta = 0.0;
  double gamma = 0.0;
  double dtheta0 = 0.0;  // initial noise increment, > 0
  double eps = 0.0;      // stop once dtheta < eps
  double eps0 = 1e-6;    // saturation threshold on per-step privacy gain
  UtilityMetric utility_metric = UtilityMetric::mutual_information;
  std::size_t max_iters = 1'000'000;

  // Scale-free defaults: dtheta0 = (max diagonal of sigma_x)/10 and
  // eps = 1e-6 * dtheta0.
  static TradeoffConfig defaults_for(const CovarianceModel& model);

  void validate() const;  // throws UsageError on violated bounds
};

enum class Termination {
  delta_theta_below_eps,
  total_saturation,
  max_iters,
  converged,   // baselines: ran to completion
  infeasible,  // baselines: final point violates the delta budget
};

std::string_view termination_name(Termination t);

// One accepted greedy step (or one recorded baseline improvement). Step
// quantities are in the run's utility metric.
struct TraceStep {
  std::size_t iteration;
  int variable;  // index noise was added to; -1 for whole-vector updates
  double dtheta;
  double privacy_gain;
  double utility_loss_step;
  double gain_factor;
  double i_xp_y;             // after the step
  double utility_loss_cum;   // after the step, metric units
};

struct TradeoffResult {
  NoiseAllocation theta;
  InfoPoint point;
  // End privacy gain over end utility loss, in the run's metric units;
  // +inf when the end loss is below kRatioFloor.
  double cumulative_ratio = 0.0;
  Termination termination = Termination::converged;
  std::vector<TraceStep> trace;
  std::size_t iterations = 0;
};

// Per-variable effect of adding dtheta to that variable alone.
// gain_factor = privacy_gain / utility_loss_step, with two special cases:
// -1 when privacy_gain < eps0 (the variable is saturated this iteration)
// and +inf when privacy_gain >= eps0 but the step loses less utility than
// kRatioFloor. In Fisher mode utility_loss_step is the decrease in
// fisher_scalar.
struct StepEvaluation {
  double privacy_gain;
  double utility_loss_step;
  double gain_factor;
};

std::vector<StepEvaluation> step_evaluation(const CovarianceModel& model,
                                            const NoiseAllocation& theta,
                                            double dtheta, double eps0,
                                            UtilityMetric metric);

// The greedy loop: evaluate every variable, pick the best gain factor
// (ties to the lowest index), stop on total saturation, tentatively commit
// dtheta on the winner and keep it only if the cumulative delta- and
// gamma-constraints still hold, otherwise halve dtheta; stop once dtheta
// drops below eps or the iteration cap is hit.
TradeoffResult greedy_optimize(const CovarianceModel& model,
                               const TradeoffConfig& config);

struct ConstraintCheck {
  std::string_view name;
  bool pass;
  double slack;  // >= 0 when satisfied; how much was left
};

struct ConstraintReport {
  ConstraintCheck delta_constraint;
  ConstraintCheck gamma_constraint;
  ConstraintCheck nonnegativity;

  bool all_pass() const {
    return delta_constraint.pass && gamma_constraint.pass &&
           nonnegativity.pass;
  }
};

// Independent post-hoc check: recomputes the end utility loss, the
// cumulative ratio and the noise non-negativity from scratch.
ConstraintReport verify_result(const CovarianceModel& model,
                               const TradeoffConfig& config,
                               const TradeoffResult& result);

}  // namespace privut

#endif  // PRIVUT_GREEDY_HPP
