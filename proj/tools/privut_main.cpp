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

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "privut/baselines.hpp"
#include "privut/csv.hpp"
#include "privut/datasets.hpp"
#include "privut/fisher_info.hpp"
#include "privut/gauss_info.hpp"
#include "privut/greedy.hpp"
#include "privut/model_io.hpp"
#include "privut/sweep.hpp"

namespace {

using namespace privut;

constexpr double kLn2 = 0.6931471805599453;

int exit_code_for(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::usage:
      return 1;
    case ErrorCategory::validation:
      return 2;
    case ErrorCategory::numerical:
      return 3;
    case ErrorCategory::capability:
      return 4;
  }
  return 1;
}

std::string fmt(double v) { return format_double_sig12(v); }

std::string nats_and_bits(double v) {
  return fmt(v) + " nats (" + fmt(v / kLn2) + " bits)";
}

NoiseAllocation parse_theta(const std::string& csv, std::size_t n) {
  if (csv.empty()) return NoiseAllocation::zeros(n);
  NoiseAllocation theta;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string cell =
        csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      theta.theta.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw UsageError("cannot parse theta component '" + cell + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (theta.theta.size() != n) {
    throw UsageError("theta has " + std::to_string(theta.theta.size()) +
                     " components, model needs " + std::to_string(n));
  }
  return theta;
}

void print_point(const InfoPoint& point) {
  std::cout << "I(Xp;Y):      " << nats_and_bits(point.i_xp_y) << "\n"
            << "I(Xu;Y):      " << nats_and_bits(point.i_xu_y) << "\n"
            << "utility loss: " << nats_and_bits(point.utility_loss) << "\n";
}

void print_report(const ConstraintReport& report) {
  for (const ConstraintCheck* c :
       {&report.delta_constraint, &report.gamma_constraint,
        &report.nonnegativity}) {
    std::cout << c->name << ": " << (c->pass ? "pass" : "FAIL")
              << " (slack " << fmt(c->slack) << ")\n";
  }
}

struct CommonOpts {
  std::string model_path;
  double delta = 0.0;
  double gamma = 0.0;
  double dtheta0 = 0.0;
  double eps = 0.0;
  double eps0 = 1e-6;
  std::string metric = "mi";
  std::uint64_t max_iters = 1'000'000;
};

TradeoffConfig config_from(const CommonOpts& opts,
                           const CovarianceModel& model) {
  TradeoffConfig config = TradeoffConfig::defaults_for(model);
  if (opts.dtheta0 > 0.0) {
    config.dtheta0 = opts.dtheta0;
    config.eps = 1e-6 * opts.dtheta0;
  }
  if (opts.eps > 0.0) config.eps = opts.eps;
  config.delta = opts.delta;
  config.gamma = opts.gamma;
  config.eps0 = opts.eps0;
  config.max_iters = opts.max_iters;
  if (opts.metric == "mi") {
    config.utility_metric = UtilityMetric::mutual_information;
  } else if (opts.metric == "fisher") {
    config.utility_metric = UtilityMetric::fisher_information;
  } else {
    throw UsageError("unknown metric '" + opts.metric +
                     "' (available: mi, fisher)");
  }
  return config;
}

std::vector<Algorithm> parse_algorithms(const std::vector<std::string>& names) {
  std::vector<Algorithm> out;
  out.reserve(names.size());
  for (const std::string& n : names) out.push_back(algorithm_by_name(n));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"privacy-utility tradeoffs for jointly Gaussian feature "
               "models under additive noise"};
  app.require_subcommand(1);

  // datasets
  auto* cmd_datasets = app.add_subcommand(
      "datasets", "write a bundled example model document");
  std::string dataset_name;
  std::string datasets_out;
  cmd_datasets->add_option("name", dataset_name, "dataset1 or dataset2")
      ->required();
  cmd_datasets->add_option("--out", datasets_out,
                           "output path (default: stdout)");

  // evaluate
  auto* cmd_evaluate = app.add_subcommand(
      "evaluate", "information measures of a model at a noise allocation");
  std::string eval_model, eval_theta;
  cmd_evaluate->add_option("--model", eval_model, "model document path")
      ->required();
  cmd_evaluate->add_option(
      "--theta", eval_theta,
      "comma-separated noise variances (default: all zero)");

  // optimize
  auto* cmd_optimize =
      app.add_subcommand("optimize", "run one noise-allocation optimizer");
  CommonOpts opt;
  std::string opt_algorithm = "greedy";
  std::string opt_trace;
  std::uint64_t opt_seed = 1;
  cmd_optimize->add_option("--model", opt.model_path, "model document path")
      ->required();
  cmd_optimize->add_option("--algorithm", opt_algorithm, "greedy, gd or sa");
  cmd_optimize->add_option("--delta", opt.delta,
                           "utility budget (nats in mi mode, Fisher lower "
                           "bound in fisher mode)");
  cmd_optimize->add_option("--gamma", opt.gamma,
                           "minimum cumulative privacy gain per unit utility "
                           "loss (greedy only)");
  cmd_optimize->add_option("--dtheta0", opt.dtheta0,
                           "initial noise increment (default: max diag of "
                           "sigma_x / 10)");
  cmd_optimize->add_option("--eps", opt.eps,
                           "stop once the increment drops below this "
                           "(default: 1e-6 * dtheta0)");
  cmd_optimize->add_option("--eps0", opt.eps0,
                           "saturation threshold on per-step privacy gain");
  cmd_optimize->add_option("--metric", opt.metric, "mi or fisher");
  cmd_optimize->add_option("--max-iters", opt.max_iters, "iteration cap");
  cmd_optimize->add_option("--seed", opt_seed, "RNG seed (sa only)");
  cmd_optimize->add_option("--trace", opt_trace,
                           "write the accepted-step trace CSV here");

  // sweep
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "run a delta/gamma/eps0 grid and write curve data");
  CommonOpts sweep_opts;
  std::vector<double> sweep_deltas, sweep_gammas{0.0}, sweep_eps0s{1e-6};
  std::vector<std::string> sweep_algorithms{"greedy"};
  std::vector<std::uint64_t> sweep_seeds{1};
  std::size_t sweep_jobs = 1;
  std::string sweep_out;
  cmd_sweep->add_option("--model", sweep_opts.model_path, "model document path")
      ->required();
  cmd_sweep->add_option("--deltas", sweep_deltas,
                        "delta grid (default: 25 points over [0, "
                        "1.1*I(Xu;X)])");
  cmd_sweep->add_option("--gammas", sweep_gammas, "gamma grid");
  cmd_sweep->add_option("--eps0s", sweep_eps0s, "eps0 grid");
  cmd_sweep->add_option("--algorithms", sweep_algorithms,
                        "subset of greedy,gd,sa");
  cmd_sweep->add_option("--metric", sweep_opts.metric, "mi or fisher");
  cmd_sweep->add_option("--seeds", sweep_seeds, "seeds (one row per seed)");
  cmd_sweep->add_option("--dtheta0", sweep_opts.dtheta0,
                        "initial noise increment override");
  cmd_sweep->add_option("--eps", sweep_opts.eps, "termination override");
  cmd_sweep->add_option("--max-iters", sweep_opts.max_iters, "iteration cap");
  cmd_sweep->add_option("--jobs", sweep_jobs, "parallel cells");
  cmd_sweep->add_option("--out", sweep_out, "output CSV path")->required();

  // sample
  auto* cmd_sample =
      app.add_subcommand("sample", "draw rows from a model block");
  std::string sample_model, sample_block = "x_xu", sample_out;
  std::size_t sample_count = 0;
  std::uint64_t sample_seed = 0;
  cmd_sample->add_option("--model", sample_model, "model document path")
      ->required();
  cmd_sample->add_option("--block", sample_block, "x_xp or x_xu");
  cmd_sample->add_option("--count", sample_count, "number of rows")
      ->required();
  cmd_sample->add_option("--seed", sample_seed, "RNG seed")->required();
  cmd_sample->add_option("--out", sample_out, "output CSV path")->required();

  // estimate
  auto* cmd_estimate = app.add_subcommand(
      "estimate", "estimate a model from two sample CSVs");
  std::string est_xp, est_xu, est_out;
  cmd_estimate->add_option("--x-xp", est_xp, "[X; Xp] sample CSV")->required();
  cmd_estimate->add_option("--x-xu", est_xu, "[X; Xu] sample CSV")->required();
  cmd_estimate->add_option("--out", est_out,
                           "output model path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*cmd_datasets) {
      const CovarianceModel model = dataset_by_name(dataset_name);
      if (datasets_out.empty()) {
        std::cout << emit_model(model);
      } else {
        save_model(model, datasets_out);
        std::cout << "wrote " << dataset_name << " to " << datasets_out
                  << "\n";
      }
    } else if (*cmd_evaluate) {
      const CovarianceModel model = load_model(eval_model);
      const NoiseAllocation theta = parse_theta(eval_theta, model.n);
      print_point(info_point(model, theta));
      if (model.n_u == 1) {
        std::cout << "fisher(Xu):   " << fmt(fisher_scalar(model, theta))
                  << "\n";
      }
    } else if (*cmd_optimize) {
      const CovarianceModel model = load_model(opt.model_path);
      const TradeoffConfig config = config_from(opt, model);
      const Algorithm algorithm = algorithm_by_name(opt_algorithm);
      TradeoffResult result;
      switch (algorithm) {
        case Algorithm::greedy:
          result = greedy_optimize(model, config);
          break;
        case Algorithm::gd:
          result = gradient_descent(model, config, PenaltyParams{});
          break;
        case Algorithm::sa: {
          AnnealParams params;
          params.seed = opt_seed;
          result = simulated_annealing(model, config, params);
          break;
        }
      }
      std::cout << "algorithm:    " << algorithm_name(algorithm) << "\n"
                << "termination:  " << termination_name(result.termination)
                << "\n"
                << "iterations:   " << result.iterations << "\n";
      std::cout << "theta:        ";
      for (std::size_t i = 0; i < result.theta.theta.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << fmt(result.theta.theta[i]);
      }
      std::cout << "\n";
      print_point(result.point);
      if (model.n_u == 1) {
        std::cout << "fisher(Xu):   "
                  << fmt(fisher_scalar(model, result.theta)) << "\n";
      }
      std::cout << "cumulative gain/loss ratio: "
                << fmt(result.cumulative_ratio) << "\n";
      print_report(verify_result(model, config, result));
      if (!opt_trace.empty()) {
        write_trace_csv(opt_trace, result.trace,
                        algorithm == Algorithm::greedy
                            ? std::string_view{}
                            : algorithm_name(algorithm));
        std::cout << "trace: " << opt_trace << "\n";
      }
    } else if (*cmd_sweep) {
      const CovarianceModel model = load_model(sweep_opts.model_path);
      SweepSpec spec;
      spec.delta_grid = sweep_deltas;
      spec.gamma_grid = sweep_gammas;
      spec.eps0_grid = sweep_eps0s;
      spec.algorithms = parse_algorithms(sweep_algorithms);
      spec.utility_metric =
          config_from(sweep_opts, model).utility_metric;
      spec.seeds = sweep_seeds;
      spec.dtheta0 = sweep_opts.dtheta0;
      spec.eps = sweep_opts.eps;
      spec.max_iters = sweep_opts.max_iters;
      const std::vector<CurveRow> rows = run_sweep(model, spec, sweep_jobs);
      write_curve_csv(sweep_out, rows);
      std::cout << "wrote " << rows.size() << " rows to " << sweep_out << "\n";
    } else if (*cmd_sample) {
      const CovarianceModel model = load_model(sample_model);
      SampleBlock block;
      if (sample_block == "x_xp") {
        block = SampleBlock::x_xp;
      } else if (sample_block == "x_xu") {
        block = SampleBlock::x_xu;
      } else {
        throw UsageError("unknown block '" + sample_block +
                         "' (available: x_xp, x_xu)");
      }
      const Matrix rows =
          sample_dataset(model, sample_count, sample_seed, block);
      const std::vector<std::string> headers =
          block == SampleBlock::x_xp
              ? block_headers(model.n, model.n_p, "xp")
              : block_headers(model.n, model.n_u, "xu");
      write_samples_csv(sample_out, headers, rows);
      std::cout << "wrote " << rows.rows() << " rows to " << sample_out
                << "\n";
    } else if (*cmd_estimate) {
      const SampleCsv xp = read_samples_csv(est_xp);
      const SampleCsv xu = read_samples_csv(est_xu);
      const std::size_t n_xp = x_block_width(xp.headers);
      const std::size_t n_xu = x_block_width(xu.headers);
      if (n_xp == 0 || n_xu == 0) {
        throw UsageError(
            "sample CSVs must start with x1..xn columns followed by xp*/xu* "
            "columns");
      }
      if (n_xp != n_xu) {
        throw UsageError("X-block column count mismatch: " +
                         std::to_string(n_xp) + " in " + est_xp + " vs " +
                         std::to_string(n_xu) + " in " + est_xu);
      }
      const CovarianceModel model =
          estimate_from_samples(xp.data, xu.data, n_xp);
      if (est_out.empty()) {
        std::cout << emit_model(model);
      } else {
        save_model(model, est_out);
        std::cout << "wrote model to " << est_out << "\n";
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
