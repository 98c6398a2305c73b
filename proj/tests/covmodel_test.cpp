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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "privut/covmodel.hpp"
#include "privut/datasets.hpp"
#include "test_util.hpp"

using namespace privut;

namespace {

CovarianceModel tiny_identity_model() {
  CovarianceModel model;
  model.n = 2;
  model.n_p = 1;
  model.n_u = 1;
  model.sigma_x = Matrix::identity(2);
  model.sigma_x_xp = Matrix::identity(3);
  model.sigma_x_xu = Matrix::identity(3);
  return model;
}

Matrix sample_cov(const Matrix& samples) {
  const std::size_t rows = samples.rows(), d = samples.cols();
  std::vector<double> mean(d, 0.0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < d; ++j) mean[j] += samples(r, j);
  for (double& v : mean) v /= static_cast<double>(rows);
  Matrix cov(d, d);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        cov(i, j) += (samples(r, i) - mean[i]) * (samples(r, j) - mean[j]);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      cov(i, j) /= static_cast<double>(rows - 1);
  return cov;
}

double rel_frobenius_error(const Matrix& a, const Matrix& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      num += (a(i, j) - b(i, j)) * (a(i, j) - b(i, j));
      den += b(i, j) * b(i, j);
    }
  return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("the bundled models and the identity model validate cleanly") {
  CHECK(validate_model(dataset1()).ok());
  CHECK(validate_model(dataset2()).ok());
  CHECK(validate_model(tiny_identity_model()).ok());
}

TEST_CASE("an asymmetric entry is reported as a symmetry violation") {
  CovarianceModel model = tiny_identity_model();
  model.sigma_x(0, 1) = 0.5;
  model.sigma_x(1, 0) = 0.4;
  const ValidationReport report = validate_model(model);
  REQUIRE_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) {
    if (v.invariant == "symmetry" && v.detail.find("sigma_x(0,1)") !=
                                         std::string::npos) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("an indefinite matrix is reported with the failing pivot") {
  CovarianceModel model = tiny_identity_model();
  model.sigma_x_xu = Matrix{{1.0, 0.0, 0.999},  //
                            {0.0, 1.0, 0.0},
                            {0.999, 0.0, 0.99}};
  const ValidationReport report = validate_model(model);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].invariant == "positive_definite");
  CHECK(report.violations[0].detail.find("sigma_x_xu") != std::string::npos);
}

TEST_CASE("a leading block that disagrees with sigma_x is rejected") {
  CovarianceModel model = tiny_identity_model();
  model.sigma_x_xp(0, 0) = 1.5;
  const ValidationReport report = validate_model(model);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].invariant == "block_consistency");
}

TEST_CASE("declared dimensions must match the matrix shapes") {
  CovarianceModel model = tiny_identity_model();
  model.n = 3;
  CHECK_THROWS_AS(validate_model(model), UsageError);
}

TEST_CASE("n, n_p, n_u below one are invariant violations") {
  CovarianceModel model;
  model.n = 1;
  model.n_p = 0;
  model.n_u = 1;
  model.sigma_x = Matrix::identity(1);
  model.sigma_x_xp = Matrix::identity(1);
  model.sigma_x_xu = Matrix::identity(2);
  const ValidationReport report = validate_model(model);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].invariant == "dimensions");
}

TEST_CASE("noisy_covariances adds theta to the leading diagonal only") {
  const CovarianceModel model = dataset1();

  SUBCASE("zero noise returns the model matrices unchanged") {
    const NoisyCovariances noisy =
        noisy_covariances(model, NoiseAllocation::zeros(2));
    CHECK(noisy.sigma_y == model.sigma_x);
    CHECK(noisy.sigma_y_xp == model.sigma_x_xp);
    CHECK(noisy.sigma_y_xu == model.sigma_x_xu);
  }

  SUBCASE("theta lands on the first n diagonal entries") {
    const NoisyCovariances noisy =
        noisy_covariances(model, NoiseAllocation{{10.0, 0.0}});
    CHECK(noisy.sigma_y(0, 0) == doctest::Approx(148.27).epsilon(1e-15));
    CHECK(noisy.sigma_y(0, 1) == 165.66);
    CHECK(noisy.sigma_y_xp(0, 0) == doctest::Approx(148.27).epsilon(1e-15));
    CHECK(noisy.sigma_y_xp(2, 2) == 8.76);  // private variance untouched
    CHECK(noisy.sigma_y_xu(2, 2) == 2.26);
  }

  SUBCASE("scalar model") {
    CovarianceModel scalar;
    scalar.n = 1;
    scalar.n_p = 1;
    scalar.n_u = 1;
    scalar.sigma_x = Matrix{{4.0}};
    scalar.sigma_x_xp = Matrix{{4.0, 1.0}, {1.0, 2.0}};
    scalar.sigma_x_xu = Matrix{{4.0, 0.5}, {0.5, 1.0}};
    const NoisyCovariances noisy =
        noisy_covariances(scalar, NoiseAllocation{{1.0}});
    CHECK(noisy.sigma_y(0, 0) == 5.0);
  }

  SUBCASE("wrong length and negative components are usage errors") {
    CHECK_THROWS_AS(noisy_covariances(model, NoiseAllocation{{1.0}}),
                    UsageError);
    CHECK_THROWS_AS(noisy_covariances(model, NoiseAllocation{{1.0, -0.5}}),
                    UsageError);
  }
}

TEST_CASE("noisy covariances stay symmetric and positive definite") {
  std::mt19937_64 gen(23);
  for (int rep = 0; rep < 30; ++rep) {
    CovarianceModel model = testutil::random_model(gen);
    NoiseAllocation theta = testutil::random_theta(gen, model.n, 50.0);
    const NoisyCovariances noisy = noisy_covariances(model, theta);
    CovarianceModel noised = model;
    noised.sigma_x = noisy.sigma_y;
    noised.sigma_x_xp = noisy.sigma_y_xp;
    noised.sigma_x_xu = noisy.sigma_y_xu;
    CHECK(validate_model(noised).ok());
  }
}

TEST_CASE("estimation recovers the generating model") {
  const CovarianceModel model = dataset1();
  const Matrix xp = sample_dataset(model, 1'000'000, 101, SampleBlock::x_xp);
  const Matrix xu = sample_dataset(model, 1'000'000, 202, SampleBlock::x_xu);
  const CovarianceModel est = estimate_from_samples(xp, xu, 2);
  CHECK(est.n == 2);
  CHECK(est.n_p == 1);
  CHECK(est.n_u == 1);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(est.sigma_x_xp(i, j) ==
            doctest::Approx(model.sigma_x_xp(i, j)).epsilon(0.02));
      CHECK(est.sigma_x_xu(i, j) ==
            doctest::Approx(model.sigma_x_xu(i, j)).epsilon(0.02));
    }
  }
}

TEST_CASE("estimation rejects degenerate input") {
  SUBCASE("identical rows give a singular estimate") {
    Matrix flat(2, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      flat(0, j) = 1.0;
      flat(1, j) = 1.0;
    }
    CHECK_THROWS_AS(estimate_from_samples(flat, flat, 2), ValidationError);
  }
  SUBCASE("fewer than two rows") {
    const Matrix one(1, 3, 1.0);
    CHECK_THROWS_AS(estimate_from_samples(one, one, 2), UsageError);
  }
  SUBCASE("the X block must leave room for the tail feature") {
    const Matrix ok(5, 3, 1.0);
    const Matrix narrow(5, 2, 1.0);
    CHECK_THROWS_AS(estimate_from_samples(ok, narrow, 2), UsageError);
  }
}

TEST_CASE("sampling shape, determinism and consistency") {
  const CovarianceModel model = dataset1();

  SUBCASE("count = 1 yields one row of width n + n_u") {
    const Matrix row = sample_dataset(model, 1, 5, SampleBlock::x_xu);
    CHECK(row.rows() == 1);
    CHECK(row.cols() == 3);
  }

  SUBCASE("count = 0 is an error") {
    CHECK_THROWS_AS(sample_dataset(model, 0, 5, SampleBlock::x_xu),
                    UsageError);
  }

  SUBCASE("the same seed reproduces the same matrix") {
    const Matrix a = sample_dataset(model, 64, 99, SampleBlock::x_xp);
    const Matrix b = sample_dataset(model, 64, 99, SampleBlock::x_xp);
    CHECK(a == b);
  }

  SUBCASE("sample covariance approaches sigma_x_xu") {
    const Matrix draws = sample_dataset(model, 100'000, 31, SampleBlock::x_xu);
    const Matrix cov = sample_cov(draws);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(cov(i, j) ==
              doctest::Approx(model.sigma_x_xu(i, j)).epsilon(0.05));
  }

  SUBCASE("stored means shift the samples") {
    CovarianceModel shifted = model;
    shifted.means.x = {100.0, -50.0};
    shifted.means.xu = {7.0};
    const Matrix draws =
        sample_dataset(shifted, 20'000, 13, SampleBlock::x_xu);
    double mean0 = 0.0, mean2 = 0.0;
    for (std::size_t r = 0; r < draws.rows(); ++r) {
      mean0 += draws(r, 0);
      mean2 += draws(r, 2);
    }
    CHECK(mean0 / 20000.0 == doctest::Approx(100.0).epsilon(0.01));
    CHECK(mean2 / 20000.0 == doctest::Approx(7.0).epsilon(0.01));
  }
}

TEST_CASE("estimation error shrinks as the sample count grows") {
  // A well-conditioned model: the bundled ones have near-singular augmented
  // blocks that a 1000-row estimate cannot keep positive definite.
  std::mt19937_64 gen(77);
  const CovarianceModel model = testutil::random_model(gen, 3, 1, 1);
  auto estimate_error = [&](std::size_t count, std::uint64_t seed) {
    const Matrix xp = sample_dataset(model, count, seed, SampleBlock::x_xp);
    const Matrix xu =
        sample_dataset(model, count, seed + 1, SampleBlock::x_xu);
    const CovarianceModel est = estimate_from_samples(xp, xu, 3);
    return rel_frobenius_error(est.sigma_x_xp, model.sigma_x_xp) +
           rel_frobenius_error(est.sigma_x_xu, model.sigma_x_xu);
  };
  CHECK(estimate_error(100'000, 7000) < estimate_error(1'000, 7000));
}

TEST_CASE("a near-singular model defeats small-sample estimation") {
  // dataset1's [X; Xp] block has smallest eigenvalue ~0.1 against entries
  // of ~240; a 1000-row estimate lands outside the PD cone and is rejected
  // rather than silently repaired.
  const CovarianceModel model = dataset1();
  const Matrix xp = sample_dataset(model, 1'000, 7000, SampleBlock::x_xp);
  const Matrix xu = sample_dataset(model, 1'000, 7001, SampleBlock::x_xu);
  CHECK_THROWS_AS(estimate_from_samples(xp, xu, 2), ValidationError);
}
