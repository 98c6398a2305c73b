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

#include "privut/covmodel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "privut/cholesky.hpp"
#include "privut/kernels.hpp"

namespace privut {
namespace {

std::string entry(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_symmetry(const Matrix& m, const std::string& name,
                    ValidationReport& report) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const double a = m(i, j), b = m(j, i);
      const double tol = kSymmetryRelTol * std::max(std::abs(a), std::abs(b));
      if (!(std::abs(a - b) <= tol)) {
        std::ostringstream detail;
        detail << name << entry(i, j) << " = " << a << " but " << name
               << entry(j, i) << " = " << b;
        report.violations.push_back({"symmetry", detail.str()});
        return;  // one entry per matrix keeps the report readable
      }
    }
  }
}

void check_finite(const Matrix& m, const std::string& name,
                  ValidationReport& report) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j))) {
        report.violations.push_back({"finite", name + entry(i, j) + " = " +
                                                   std::to_string(m(i, j))});
        return;
      }
}

// Positive definiteness down to the relative floor: A - floor*I must admit
// a Cholesky factorization, which holds iff the smallest eigenvalue of A
// exceeds the floor.
void check_positive_definite(const Matrix& m, const std::string& name,
                             ValidationReport& report) {
  Matrix shifted = m;
  const double floor = kPdFloorRel * max_abs_diagonal(m);
  for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= floor;
  try {
    Cholesky::decompose(symmetrized(shifted));
  } catch (const DefinitenessError& e) {
    char floor_text[32];
    std::snprintf(floor_text, sizeof(floor_text), "%.3e", floor);
    report.violations.push_back(
        {"positive_definite",
         name + " is not positive definite beyond the relative floor " +
             floor_text + " (failing pivot " + std::to_string(e.pivot()) +
             ")"});
  }
}

void check_leading_block(const Matrix& big, const Matrix& sigma_x,
                         const std::string& name, ValidationReport& report) {
  for (std::size_t i = 0; i < sigma_x.rows(); ++i) {
    for (std::size_t j = 0; j < sigma_x.cols(); ++j) {
      const double a = big(i, j), b = sigma_x(i, j);
      const double tol =
          kBlockConsistencyRelTol * std::max(std::abs(a), std::abs(b));
      if (!(std::abs(a - b) <= tol)) {
        std::ostringstream detail;
        detail << name << entry(i, j) << " = " << a
               << " disagrees with sigma_x" << entry(i, j) << " = " << b;
        report.violations.push_back({"block_consistency", detail.str()});
        return;
      }
    }
  }
}

void check_shapes(const CovarianceModel& m) {
  auto expect_square = [](const Matrix& mat, std::size_t d,
                          const std::string& name) {
    if (mat.rows() != d || mat.cols() != d) {
      throw UsageError(name + " must be " + std::to_string(d) + "x" +
                       std::to_string(d) + ", got " +
                       std::to_string(mat.rows()) + "x" +
                       std::to_string(mat.cols()));
    }
  };
  expect_square(m.sigma_x, m.n, "sigma_x");
  expect_square(m.sigma_x_xp, m.n + m.n_p, "sigma_x_xp");
  expect_square(m.sigma_x_xu, m.n + m.n_u, "sigma_x_xu");
  auto expect_len = [](const std::vector<double>& v, std::size_t d,
                       const std::string& name) {
    if (!v.empty() && v.size() != d) {
      throw UsageError(name + " must have length " + std::to_string(d) +
                       ", got " + std::to_string(v.size()));
    }
  };
  expect_len(m.means.x, m.n, "means.x");
  expect_len(m.means.xp, m.n_p, "means.xp");
  expect_len(m.means.xu, m.n_u, "means.xu");
}

// Unbiased sample covariance (two passes: mean, then centered rank-1
// accumulation over the upper triangle). Exactly symmetric by mirroring.
struct BlockEstimate {
  Matrix cov;
  std::vector<double> mean;
};

BlockEstimate sample_covariance(const Matrix& samples) {
  const std::size_t rows = samples.rows(), d = samples.cols();
  std::vector<double> mean(d, 0.0);
  for (std::size_t r = 0; r < rows; ++r)
    kernels::axpy(1.0, samples.row(r), mean.data(), d);
  for (double& v : mean) v /= static_cast<double>(rows);

  Matrix acc(d, d);
  std::vector<double> centered(d);
  for (std::size_t r = 0; r < rows; ++r) {
    const double* row = samples.row(r);
    for (std::size_t j = 0; j < d; ++j) centered[j] = row[j] - mean[j];
    kernels::syr_upper(centered.data(), d, acc.data());
  }
  const double scale = 1.0 / static_cast<double>(rows - 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      acc(i, j) *= scale;
      acc(j, i) = acc(i, j);
    }
  return {std::move(acc), std::move(mean)};
}

}  // namespace

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].invariant << ": " << violations[i].detail;
  }
  return out.str();
}

ValidationReport validate_model(const CovarianceModel& model) {
  check_shapes(model);
  ValidationReport report;
  if (model.n < 1 || model.n_p < 1 || model.n_u < 1) {
    report.violations.push_back(
        {"dimensions", "n, n_p, n_u must all be >= 1 (got n=" +
                           std::to_string(model.n) +
                           ", n_p=" + std::to_string(model.n_p) +
                           ", n_u=" + std::to_string(model.n_u) + ")"});
    return report;
  }
  const std::pair<const Matrix*, std::string> mats[] = {
      {&model.sigma_x, "sigma_x"},
      {&model.sigma_x_xp, "sigma_x_xp"},
      {&model.sigma_x_xu, "sigma_x_xu"}};
  for (const auto& [mat, name] : mats) check_finite(*mat, name, report);
  if (!report.ok()) return report;
  for (const auto& [mat, name] : mats) check_symmetry(*mat, name, report);
  for (const auto& [mat, name] : mats)
    check_positive_definite(*mat, name, report);
  check_leading_block(model.sigma_x_xp, model.sigma_x, "sigma_x_xp", report);
  check_leading_block(model.sigma_x_xu, model.sigma_x, "sigma_x_xu", report);
  return report;
}

void require_valid(const CovarianceModel& model) {
  const ValidationReport report = validate_model(model);
  if (!report.ok()) {
    throw ValidationError("invalid covariance model: " + report.to_string());
  }
}

void require_admissible(const CovarianceModel& model,
                        const NoiseAllocation& theta) {
  if (theta.theta.size() != model.n) {
    throw UsageError("noise allocation has length " +
                     std::to_string(theta.theta.size()) + ", expected " +
                     std::to_string(model.n));
  }
  for (std::size_t i = 0; i < theta.theta.size(); ++i) {
    if (!(theta.theta[i] >= 0.0) || !std::isfinite(theta.theta[i])) {
      throw UsageError("noise variance " + std::to_string(i) +
                       " must be finite and >= 0, got " +
                       std::to_string(theta.theta[i]));
    }
  }
}

NoisyCovariances noisy_covariances(const CovarianceModel& model,
                                   const NoiseAllocation& theta) {
  require_admissible(model, theta);
  NoisyCovariances out{model.sigma_x, model.sigma_x_xp, model.sigma_x_xu};
  for (std::size_t i = 0; i < model.n; ++i) {
    out.sigma_y(i, i) += theta.theta[i];
    out.sigma_y_xp(i, i) += theta.theta[i];
    out.sigma_y_xu(i, i) += theta.theta[i];
  }
  return out;
}

CovarianceModel estimate_from_samples(const Matrix& samples_x_xp,
                                      const Matrix& samples_x_xu,
                                      std::size_t n) {
  if (n < 1) throw UsageError("X block width n must be >= 1");
  if (samples_x_xp.rows() < 2 || samples_x_xu.rows() < 2) {
    throw UsageError("covariance estimation needs at least 2 sample rows");
  }
  if (samples_x_xp.cols() <= n || samples_x_xu.cols() <= n) {
    throw UsageError(
        "sample matrices must have more than n columns (X block plus at "
        "least one private/utility feature)");
  }
  BlockEstimate est_xp = sample_covariance(samples_x_xp);
  BlockEstimate est_xu = sample_covariance(samples_x_xu);

  CovarianceModel model;
  model.n = n;
  model.n_p = samples_x_xp.cols() - n;
  model.n_u = samples_x_xu.cols() - n;
  model.sigma_x = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      model.sigma_x(i, j) = 0.5 * (est_xp.cov(i, j) + est_xu.cov(i, j));
  // Overwrite both leading blocks with the shared estimate so the block
  // consistency invariant holds exactly.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      est_xp.cov(i, j) = model.sigma_x(i, j);
      est_xu.cov(i, j) = model.sigma_x(i, j);
    }
  model.sigma_x_xp = std::move(est_xp.cov);
  model.sigma_x_xu = std::move(est_xu.cov);
  model.means.x.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    model.means.x[i] = 0.5 * (est_xp.mean[i] + est_xu.mean[i]);
  model.means.xp.assign(est_xp.mean.begin() + static_cast<std::ptrdiff_t>(n),
                        est_xp.mean.end());
  model.means.xu.assign(est_xu.mean.begin() + static_cast<std::ptrdiff_t>(n),
                        est_xu.mean.end());

  const ValidationReport report = validate_model(model);
  if (!report.ok()) {
    throw ValidationError("estimated model failed validation: " +
                          report.to_string());
  }
  return model;
}

Matrix sample_dataset(const CovarianceModel& model, std::size_t count,
                      std::uint64_t seed, SampleBlock block) {
  if (count == 0) throw UsageError("sample count must be >= 1");
  const Matrix& cov =
      block == SampleBlock::x_xp ? model.sigma_x_xp : model.sigma_x_xu;
  const std::vector<double>& tail_mean =
      block == SampleBlock::x_xp ? model.means.xp : model.means.xu;
  const std::size_t d = cov.rows();

  std::vector<double> mean(d, 0.0);
  for (std::size_t i = 0; i < model.means.x.size(); ++i)
    mean[i] = model.means.x[i];
  for (std::size_t i = 0; i < tail_mean.size(); ++i)
    mean[model.n + i] = tail_mean[i];

  const Cholesky chol = Cholesky::decompose(symmetrized(cov));
  const Matrix& l = chol.factor();

  std::mt19937_64 gen(seed);
  std::normal_distribution<double> standard_normal(0.0, 1.0);
  Matrix out(count, d);
  std::vector<double> z(d);
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t i = 0; i < d; ++i) z[i] = standard_normal(gen);
    double* row = out.row(r);
    for (std::size_t i = 0; i < d; ++i) {
      row[i] = mean[i] + kernels::dot(l.row(i), z.data(), i + 1);
    }
  }
  return out;
}

}  // namespace privut
