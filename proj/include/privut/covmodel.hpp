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

#ifndef PRIVUT_COVMODEL_HPP
#define PRIVUT_COVMODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "privut/matrix.hpp"

namespace privut {

// Per-feature noise variances: the diagonal of the noise covariance added to
// the disclosed block. Every component must be >= 0.
struct NoiseAllocation {
  std::vector<double> theta;

  static NoiseAllocation zeros(std::size_t n) {
    return NoiseAllocation{std::vector<double>(n, 0.0)};
  }
};

// Optional per-block mean vectors. Empty vectors mean all-zero. Means are
// stored for sampling only; the information measures are mean-invariant.
struct BlockMeans {
  std::vector<double> x;
  std::vector<double> xp;
  std::vector<double> xu;

  bool empty() const { return x.empty() && xp.empty() && xu.empty(); }
};

// The jointly Gaussian feature model: n disclosed features X, n_p private
// features Xp, n_u utility features Xu. Block ordering is fixed as [X; Xp]
// and [X; Xu]; the trailing-block index arithmetic in the Fisher module
// depends on it. Immutable by convention after construction; safe to share
// across threads.
struct CovarianceModel {
  std::size_t n = 0;
  std::size_t n_p = 0;
  std::size_t n_u = 0;
  Matrix sigma_x;     // n x n
  Matrix sigma_x_xp;  // (n+n_p) x (n+n_p), X block leading
  Matrix sigma_x_xu;  // (n+n_u) x (n+n_u), X block leading
  BlockMeans means;

  Matrix sigma_xp() const { return sigma_x_xp.trailing_block(n_p); }
  Matrix sigma_xu() const { return sigma_x_xu.trailing_block(n_u); }
};

// Relative tolerances used by validate_model.
inline constexpr double kSymmetryRelTol = 1e-9;
inline constexpr double kBlockConsistencyRelTol = 1e-12;
// pd_floor = kPdFloorRel * (largest diagonal entry): the smallest eigenvalue
// a matrix may have and still count as positive definite. Scale-free.
inline constexpr double kPdFloorRel = 1e-10;

struct InvariantViolation {
  std::string invariant;  // "symmetry", "positive_definite", ...
  std::string detail;     // offending indices and values
};

struct ValidationReport {
  std::vector<InvariantViolation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Checks every model invariant and reports all violations. Declared
// dimensions that disagree with the matrix shapes are a structural problem,
// not an invariant violation, and throw UsageError instead.
ValidationReport validate_model(const CovarianceModel& model);

// Throws ValidationError carrying the report text when the model is invalid.
void require_valid(const CovarianceModel& model);

// Throws unless theta has length n with all components >= 0.
void require_admissible(const CovarianceModel& model,
                        const NoiseAllocation& theta);

struct NoisyCovariances {
  Matrix sigma_y;     // sigma_x + diag(theta)
  Matrix sigma_y_xp;  // sigma_x_xp + diag([theta; 0])
  Matrix sigma_y_xu;  // sigma_x_xu + diag([theta; 0])
};

// Adds theta to the first n diagonal entries of each matrix; the trailing
// private/utility diagonal entries are untouched.
NoisyCovariances noisy_covariances(const CovarianceModel& model,
                                   const NoiseAllocation& theta);

// Unbiased sample covariance estimation from two row-sample matrices over
// [X; Xp] (n + n_p columns) and [X; Xu] (n + n_u columns). The two X blocks
// must describe the same features; their covariance estimates are averaged.
// Estimates are symmetrized before validation; a model that still fails
// validation (e.g. rank-deficient data) raises ValidationError.
CovarianceModel estimate_from_samples(const Matrix& samples_x_xp,
                                      const Matrix& samples_x_xu,
                                      std::size_t n);

enum class SampleBlock { x_xp, x_xu };

// Draws `count` rows from the Gaussian with the selected block covariance
// (and the stored means, zero by default). Deterministic for a fixed seed.
Matrix sample_dataset(const CovarianceModel& model, std::size_t count,
                      std::uint64_t seed, SampleBlock block);

}  // namespace privut

#endif  // PRIVUT_COVMODEL_HPP
