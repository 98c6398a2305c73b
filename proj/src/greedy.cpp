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

#include "privut/greedy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "privut/cholesky.hpp"
#include "privut/fisher_info.hpp"

namespace privut {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Everything one iteration needs about the current noise point. Adding
// dtheta to a single variable is a rank-one diagonal update, so with the
// three inverses in hand every candidate is O(1) via the matrix determinant
// lemma (log-dets) and Sherman-Morrison (the trailing inverse entry that
// feeds fisher_scalar). This is what keeps an iteration at O(n^3) overall.
struct IterationState {
  std::vector<double> inv_y_diag;    // diag of inv(S_Y), length n
  std::vector<double> inv_yp_diag;   // leading diag of inv(S_{Y u Xp})
  std::vector<double> inv_yu_diag;   // leading diag of inv(S_{Y u Xu})
  std::vector<double> inv_yu_tail;   // row n of inv(S_{Y u Xu}), length n
};

IterationState evaluate_state(const CovarianceModel& model,
                              const NoiseAllocation& theta,
                              bool need_fisher_row) {
  const NoisyCovariances noisy = noisy_covariances(model, theta);
  const std::size_t n = model.n;
  IterationState st;
  st.inv_y_diag.resize(n);
  st.inv_yp_diag.resize(n);
  st.inv_yu_diag.resize(n);

  const Matrix inv_y = Cholesky::decompose(noisy.sigma_y).inverse();
  const Matrix inv_yp = Cholesky::decompose(noisy.sigma_y_xp).inverse();
  const Matrix inv_yu = Cholesky::decompose(noisy.sigma_y_xu).inverse();
  for (std::size_t i = 0; i < n; ++i) {
    st.inv_y_diag[i] = inv_y(i, i);
    st.inv_yp_diag[i] = inv_yp(i, i);
    st.inv_yu_diag[i] = inv_yu(i, i);
  }
  if (need_fisher_row) {
    st.inv_yu_tail.resize(n);
    for (std::size_t i = 0; i < n; ++i) st.inv_yu_tail[i] = inv_yu(n, i);
  }
  return st;
}

// I(Xp;Y) - I(Xp;Y_i+dtheta), exact via the determinant lemma.
double lemma_privacy_gain(const IterationState& st, std::size_t i,
                          double dtheta) {
  return 0.5 * (std::log1p(dtheta * st.inv_yp_diag[i]) -
                std::log1p(dtheta * st.inv_y_diag[i]));
}

double lemma_mi_loss(const IterationState& st, std::size_t i, double dtheta) {
  return 0.5 * (std::log1p(dtheta * st.inv_yu_diag[i]) -
                std::log1p(dtheta * st.inv_y_diag[i]));
}

// Decrease of the trailing inverse entry (= decrease of fisher_scalar)
// under the rank-one update, via Sherman-Morrison.
double lemma_fisher_loss(const IterationState& st, std::size_t i,
                         double dtheta) {
  const double cross = st.inv_yu_tail[i];
  return dtheta * cross * cross / (1.0 + dtheta * st.inv_yu_diag[i]);
}

double gain_factor_of(double privacy_gain, double loss, double eps0) {
  if (privacy_gain < eps0) return -1.0;
  if (loss < kRatioFloor) return kInf;
  return privacy_gain / loss;
}

double cumulative_ratio_of(double gain, double loss) {
  if (loss < kRatioFloor) return kInf;
  return gain / loss;
}

}  // namespace

std::string_view utility_metric_name(UtilityMetric metric) {
  return metric == UtilityMetric::mutual_information ? "mutual_information"
                                                     : "fisher_information";
}

std::string_view termination_name(Termination t) {
  switch (t) {
    case Termination::delta_theta_below_eps:
      return "delta_theta_below_eps";
    case Termination::total_saturation:
      return "total_saturation";
    case Termination::max_iters:
      return "max_iters";
    case Termination::converged:
      return "converged";
    case Termination::infeasible:
      return "infeasible";
  }
  return "unknown";
}

TradeoffConfig TradeoffConfig::defaults_for(const CovarianceModel& model) {
  TradeoffConfig config;
  config.dtheta0 = max_abs_diagonal(model.sigma_x) / 10.0;
  config.eps = 1e-6 * config.dtheta0;
  return config;
}

void TradeoffConfig::validate() const {
  if (!(dtheta0 > 0.0 && eps > 0.0 && dtheta0 > eps)) {
    throw UsageError("config requires dtheta0 > eps > 0 (dtheta0 = " +
                     std::to_string(dtheta0) + ", eps = " +
                     std::to_string(eps) + ")");
  }
  if (!(eps0 > 0.0)) throw UsageError("config requires eps0 > 0");
  if (!(delta >= 0.0)) throw UsageError("config requires delta >= 0");
  if (!(gamma >= 0.0)) throw UsageError("config requires gamma >= 0");
  if (max_iters == 0) throw UsageError("config requires max_iters > 0");
}

std::vector<StepEvaluation> step_evaluation(const CovarianceModel& model,
                                            const NoiseAllocation& theta,
                                            double dtheta, double eps0,
                                            UtilityMetric metric) {
  require_admissible(model, theta);
  if (!(dtheta > 0.0)) throw UsageError("dtheta must be positive");
  const bool fisher = metric == UtilityMetric::fisher_information;
  if (fisher && model.n_u != 1) {
    throw UsageError("fisher utility metric requires n_u = 1");
  }
  const IterationState st = evaluate_state(model, theta, fisher);
  std::vector<StepEvaluation> out(model.n);
  for (std::size_t i = 0; i < model.n; ++i) {
    const double pg = lemma_privacy_gain(st, i, dtheta);
    const double loss = fisher ? lemma_fisher_loss(st, i, dtheta)
                               : lemma_mi_loss(st, i, dtheta);
    out[i] = StepEvaluation{pg, loss, gain_factor_of(pg, loss, eps0)};
  }
  return out;
}

TradeoffResult greedy_optimize(const CovarianceModel& model,
                               const TradeoffConfig& config) {
  config.validate();
  const bool fisher =
      config.utility_metric == UtilityMetric::fisher_information;
  if (fisher && model.n_u != 1) {
    throw UsageError("fisher utility metric requires n_u = 1");
  }

  const std::size_t n = model.n;
  NoiseAllocation theta = NoiseAllocation::zeros(n);
  const double i_xp_zero = mi_private(model, theta);
  const double metric_zero =
      fisher ? fisher_scalar(model, theta) : mi_utility(model, theta);

  TradeoffResult result;
  result.theta = theta;
  double dtheta = config.dtheta0;

  while (result.iterations < config.max_iters) {
    ++result.iterations;

    const IterationState st = evaluate_state(model, theta, fisher);
    // Selection always ranks by the MI-units gain factor; the two utility
    // metrics are linked by a strictly increasing map, so this makes the
    // greedy decisions identical in both modes. The metric-units factor is
    // still what step_evaluation and the trace report.
    int best = -1;
    double best_key = -kInf;
    for (std::size_t i = 0; i < n; ++i) {
      const double pg = lemma_privacy_gain(st, i, dtheta);
      const double key =
          gain_factor_of(pg, lemma_mi_loss(st, i, dtheta), config.eps0);
      if (key > best_key) {
        best_key = key;
        best = static_cast<int>(i);
      }
    }
    if (best_key <= 0.0) {
      result.termination = Termination::total_saturation;
      break;
    }

    const std::size_t j = static_cast<std::size_t>(best);
    NoiseAllocation candidate = theta;
    candidate.theta[j] += dtheta;

    // Cumulative constraint tests at the tentative point, recomputed from
    // scratch so acceptance matches what verify_result will see.
    double metric_loss_cum;
    bool delta_ok;
    if (fisher) {
      const double f = fisher_scalar(model, candidate);
      metric_loss_cum = metric_zero - f;
      delta_ok = f >= config.delta;
    } else {
      metric_loss_cum = utility_loss(model, candidate);
      delta_ok = metric_loss_cum <= config.delta;
    }
    const double i_xp_candidate = mi_private(model, candidate);
    const double ratio =
        cumulative_ratio_of(i_xp_zero - i_xp_candidate, metric_loss_cum);

    if (delta_ok && ratio >= config.gamma) {
      theta = std::move(candidate);
      const double pg = lemma_privacy_gain(st, j, dtheta);
      const double step_loss = fisher ? lemma_fisher_loss(st, j, dtheta)
                                      : lemma_mi_loss(st, j, dtheta);
      result.trace.push_back(TraceStep{
          result.iterations, best, dtheta, pg, step_loss,
          gain_factor_of(pg, step_loss, config.eps0), i_xp_candidate,
          metric_loss_cum});
      result.theta = theta;
    } else {
      dtheta *= 0.5;
    }
    if (dtheta < config.eps) {
      result.termination = Termination::delta_theta_below_eps;
      break;
    }
  }
  if (result.iterations >= config.max_iters &&
      result.termination != Termination::delta_theta_below_eps &&
      result.termination != Termination::total_saturation) {
    result.termination = Termination::max_iters;
  }

  result.point = info_point(model, theta);
  const double end_loss = fisher ? metric_zero - fisher_scalar(model, theta)
                                 : result.point.utility_loss;
  result.cumulative_ratio =
      cumulative_ratio_of(i_xp_zero - result.point.i_xp_y, end_loss);
  return result;
}

ConstraintReport verify_result(const CovarianceModel& model,
                               const TradeoffConfig& config,
                               const TradeoffResult& result) {
  constexpr double kTol = 1e-9;
  const bool fisher =
      config.utility_metric == UtilityMetric::fisher_information;

  ConstraintReport report;

  bool nonneg = true;
  double min_component = kInf;
  for (double v : result.theta.theta) {
    min_component = std::min(min_component, v);
    if (!(v >= 0.0)) nonneg = false;
  }
  report.nonnegativity = ConstraintCheck{"noise_nonnegativity", nonneg,
                                         min_component};
  if (!nonneg) {
    // The information measures are undefined for negative noise; report the
    // remaining constraints as failed without evaluating them.
    report.delta_constraint = ConstraintCheck{"delta_budget", false, -kInf};
    report.gamma_constraint = ConstraintCheck{"gamma_ratio", false, -kInf};
    return report;
  }

  double delta_slack;
  double end_loss;
  if (fisher) {
    const double f = fisher_scalar(model, result.theta);
    delta_slack = f - config.delta;
    end_loss = fisher_scalar(model, NoiseAllocation::zeros(model.n)) - f;
  } else {
    const double loss = utility_loss(model, result.theta);
    delta_slack = config.delta - loss;
    end_loss = loss;
  }
  const double i_xp_zero = mi_private(model, NoiseAllocation::zeros(model.n));
  const double i_xp_end = mi_private(model, result.theta);
  report.delta_constraint =
      ConstraintCheck{"delta_budget", delta_slack >= -kTol, delta_slack};

  const double ratio = cumulative_ratio_of(i_xp_zero - i_xp_end, end_loss);
  const double gamma_slack = ratio - config.gamma;  // +inf passes any gamma
  report.gamma_constraint =
      ConstraintCheck{"gamma_ratio", !(gamma_slack < -kTol), gamma_slack};
  return report;
}

}  // namespace privut
