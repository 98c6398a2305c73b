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

#ifndef PRIVUT_SWEEP_HPP
#define PRIVUT_SWEEP_HPP

#include <string>

#include "privut/baselines.hpp"
#include "privut/greedy.hpp"

namespace privut {

enum class Algorithm { greedy, gd, sa };

std::string_view algorithm_name(Algorithm a);
Algorithm algorithm_by_name(std::string_view name);

// A grid of tradeoff runs. Every (algorithm, gamma, eps0, delta, seed)
// combination is one independent cell. gd and sa only run with
// gamma_grid = {0} and the mutual-information metric.
struct SweepSpec {
  std::vector<double> delta_grid;  // empty = 25 points over [0, 1.1*I(Xu;X)]
  std::vector<double> gamma_grid{0.0};
  std::vector<double> eps0_grid{1e-6};
  std::vector<Algorithm> algorithms{Algorithm::greedy};
  UtilityMetric utility_metric = UtilityMetric::mutual_information;
  std::vector<std::uint64_t> seeds{1};
  double dtheta0 = 0.0;  // 0 = model default (max diag of sigma_x / 10)
  double eps = 0.0;      // 0 = 1e-6 * dtheta0
  std::size_t max_iters = 1'000'000;
  PenaltyParams gd;
  AnnealParams sa;  // seed field is overridden by the cell seed

  void validate() const;
};

// Number of evenly spaced delta points used when delta_grid is empty.
inline constexpr std::size_t kDefaultDeltaPoints = 25;

std::vector<double> default_delta_grid(const CovarianceModel& model);

struct CurveRow {
  Algorithm algorithm;
  double delta;
  double gamma;
  double eps0;
  UtilityMetric utility_metric;
  double i_xp_y;
  double i_xu_y;
  double utility_loss;
  double cumulative_ratio;
  std::size_t iterations;
  double wall_time_seconds;
  std::string termination;  // termination reason, or "error" for failed cells
  std::uint64_t seed;       // not written to the CSV
};

// Runs every cell (in parallel up to `jobs` threads) and returns the rows
// sorted by (algorithm, gamma, eps0, delta, seed). Cells that raise an
// error produce a row with termination = "error" and zeroed numeric fields;
// the sweep keeps going.
std::vector<CurveRow> run_sweep(const CovarianceModel& model,
                                const SweepSpec& spec, std::size_t jobs = 1);

// CSV with the CurveRow columns (minus the seed), 12 significant digits.
void write_curve_csv(const std::string& path,
                     const std::vector<CurveRow>& rows);

}  // namespace privut

#endif  // PRIVUT_SWEEP_HPP
