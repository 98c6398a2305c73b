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

#include "privut/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>
#include <tuple>

#include "privut/csv.hpp"

namespace privut {
namespace {

struct Cell {
  Algorithm algorithm;
  double delta;
  double gamma;
  double eps0;
  std::uint64_t seed;
};

CurveRow run_cell(const CovarianceModel& model, const SweepSpec& spec,
                  const Cell& cell) {
  CurveRow row{cell.algorithm, cell.delta,  cell.gamma, cell.eps0,
               spec.utility_metric, 0.0,    0.0,        0.0,
               0.0,             0,          0.0,        "error",
               cell.seed};
  const auto start = std::chrono::steady_clock::now();
  try {
    TradeoffConfig config =
        spec.dtheta0 > 0.0 ? TradeoffConfig{} : TradeoffConfig::defaults_for(model);
    if (spec.dtheta0 > 0.0) {
      config.dtheta0 = spec.dtheta0;
      config.eps = spec.eps > 0.0 ? spec.eps : 1e-6 * spec.dtheta0;
    } else if (spec.eps > 0.0) {
      config.eps = spec.eps;
    }
    config.delta = cell.delta;
    config.gamma = cell.gamma;
    config.eps0 = cell.eps0;
    config.utility_metric = spec.utility_metric;
    config.max_iters = spec.max_iters;

    TradeoffResult result;
    switch (cell.algorithm) {
      case Algorithm::greedy:
        result = greedy_optimize(model, config);
        break;
      case Algorithm::gd:
        result = gradient_descent(model, config, spec.gd);
        break;
      case Algorithm::sa: {
        AnnealParams params = spec.sa;
        params.seed = cell.seed;
        result = simulated_annealing(model, config, params);
        break;
      }
    }
    row.i_xp_y = result.point.i_xp_y;
    row.i_xu_y = result.point.i_xu_y;
    row.utility_loss = result.point.utility_loss;
    row.cumulative_ratio = result.cumulative_ratio;
    row.iterations = result.iterations;
    row.termination = std::string(termination_name(result.termination));
  } catch (const Error&) {
    // keep the "error" row; the sweep continues
  }
  row.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return row;
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::greedy:
      return "greedy";
    case Algorithm::gd:
      return "gd";
    case Algorithm::sa:
      return "sa";
  }
  return "unknown";
}

Algorithm algorithm_by_name(std::string_view name) {
  if (name == "greedy") return Algorithm::greedy;
  if (name == "gd") return Algorithm::gd;
  if (name == "sa") return Algorithm::sa;
  throw UsageError("unknown algorithm '" + std::string(name) +
                   "' (available: greedy, gd, sa)");
}

void SweepSpec::validate() const {
  if (gamma_grid.empty() || eps0_grid.empty() || algorithms.empty() ||
      seeds.empty()) {
    throw UsageError("sweep grids must be non-empty");
  }
  for (double d : delta_grid)
    if (!(d >= 0.0)) throw UsageError("delta grid values must be >= 0");
  if (!std::is_sorted(delta_grid.begin(), delta_grid.end())) {
    throw UsageError("delta grid must be ascending");
  }
  for (double g : gamma_grid)
    if (!(g >= 0.0)) throw UsageError("gamma grid values must be >= 0");
  for (double e : eps0_grid)
    if (!(e > 0.0)) throw UsageError("eps0 grid values must be > 0");
  const bool has_baseline =
      std::any_of(algorithms.begin(), algorithms.end(),
                  [](Algorithm a) { return a != Algorithm::greedy; });
  if (has_baseline) {
    if (gamma_grid.size() != 1 || gamma_grid[0] != 0.0) {
      throw UsageError(
          "gd/sa sweeps require gamma_grid = {0}; run a separate greedy "
          "sweep for gamma > 0");
    }
    if (utility_metric != UtilityMetric::mutual_information) {
      throw UsageError("gd/sa sweeps support the mutual_information metric "
                       "only");
    }
  }
}

std::vector<double> default_delta_grid(const CovarianceModel& model) {
  const double i_xu_x = mi_utility(model, NoiseAllocation::zeros(model.n));
  std::vector<double> grid(kDefaultDeltaPoints);
  const double top = 1.1 * i_xu_x;
  for (std::size_t i = 0; i < kDefaultDeltaPoints; ++i) {
    grid[i] = top * static_cast<double>(i) /
              static_cast<double>(kDefaultDeltaPoints - 1);
  }
  return grid;
}

std::vector<CurveRow> run_sweep(const CovarianceModel& model,
                                const SweepSpec& spec, std::size_t jobs) {
  spec.validate();
  const std::vector<double> deltas =
      spec.delta_grid.empty() ? default_delta_grid(model) : spec.delta_grid;

  std::vector<Cell> cells;
  for (Algorithm a : spec.algorithms)
    for (double gamma : spec.gamma_grid)
      for (double eps0 : spec.eps0_grid)
        for (double delta : deltas)
          for (std::uint64_t seed : spec.seeds)
            cells.push_back(Cell{a, delta, gamma, eps0, seed});

  std::vector<CurveRow> rows(cells.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      rows[i] = run_cell(model, spec, cells[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cells.size()) return;
        rows[i] = run_cell(model, spec, cells[i]);
      }
    };
    std::vector<std::thread> pool;
    const std::size_t thread_count = std::min(jobs, cells.size());
    pool.reserve(thread_count);
    for (std::size_t t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  // Deterministic output order regardless of completion order.
  std::sort(rows.begin(), rows.end(), [](const CurveRow& a, const CurveRow& b) {
    return std::make_tuple(algorithm_name(a.algorithm), a.gamma, a.eps0,
                           a.delta, a.seed) <
           std::make_tuple(algorithm_name(b.algorithm), b.gamma, b.eps0,
                           b.delta, b.seed);
  });
  return rows;
}

void write_curve_csv(const std::string& path,
                     const std::vector<CurveRow>& rows) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write CSV file: " + path);
  out << "algorithm,delta,gamma,eps0,utility_metric,i_xp_y,i_xu_y,"
         "utility_loss,cumulative_ratio,iterations,wall_time_seconds,"
         "termination\n";
  for (const CurveRow& row : rows) {
    out << algorithm_name(row.algorithm) << ','
        << format_double_sig12(row.delta) << ','
        << format_double_sig12(row.gamma) << ','
        << format_double_sig12(row.eps0) << ','
        << utility_metric_name(row.utility_metric) << ','
        << format_double_sig12(row.i_xp_y) << ','
        << format_double_sig12(row.i_xu_y) << ','
        << format_double_sig12(row.utility_loss) << ','
        << format_double_sig12(row.cumulative_ratio) << ','
        << row.iterations << ','
        << format_double_sig12(row.wall_time_seconds) << ','
        << row.termination << '\n';
  }
}

}  // namespace privut
