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
#include <numbers>
#include <random>

#include "doctest.h"
#include "privut/datasets.hpp"
#include "privut/gauss_info.hpp"
#include "test_util.hpp"

using namespace privut;
using testutil::oracle_mi_private;
using testutil::oracle_mi_utility;

namespace {
const double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;
}

TEST_CASE("gaussian entropy normalizations") {
  CHECK(gaussian_entropy(Matrix{{1.0 / kTwoPiE}}) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(gaussian_entropy(Matrix::identity(2)) ==
        doctest::Approx(std::log(kTwoPiE)).epsilon(1e-12));
  const Matrix sigma_x = dataset1().sigma_x;
  const double expected =
      0.5 * (2.0 * std::log(kTwoPiE) +
             std::log(testutil::cofactor_det(sigma_x)));
  CHECK(gaussian_entropy(sigma_x) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("zero-noise mutual information on the bundled model") {
  const CovarianceModel model = dataset1();
  const NoiseAllocation zero = NoiseAllocation::zeros(2);

  // Golden values pinned through the cofactor oracle.
  const double oracle_private = oracle_mi_private(model, zero);
  const double oracle_utility = oracle_mi_utility(model, zero);
  CHECK(oracle_private == doctest::Approx(2.187746204715).epsilon(1e-9));
  CHECK(oracle_utility == doctest::Approx(1.064650984418).epsilon(1e-9));

  CHECK(mi_private(model, zero) ==
        doctest::Approx(oracle_private).epsilon(1e-12));
  CHECK(mi_utility(model, zero) ==
        doctest::Approx(oracle_utility).epsilon(1e-12));
}

TEST_CASE("independent blocks carry no information") {
  const CovarianceModel model = testutil::independent_tail_model(true, true);
  for (double noise : {0.0, 1.0, 25.0}) {
    const NoiseAllocation theta{{noise, noise}};
    CHECK(mi_private(model, theta) == 0.0);
    CHECK(mi_utility(model, theta) == 0.0);
  }
  const InfoPoint point = info_point(model, NoiseAllocation::zeros(2));
  CHECK(point.i_xp_y == 0.0);
  CHECK(point.i_xu_y == 0.0);
  CHECK(point.utility_loss == 0.0);
}

TEST_CASE("large noise drives the measures to their limits") {
  const CovarianceModel model = dataset1();
  const NoiseAllocation big{{1e8, 1e8}};
  CHECK(mi_private(model, big) < 0.01);
  CHECK(mi_private(model, big) ==
        doctest::Approx(oracle_mi_private(model, big)).epsilon(1e-6));
  const double i_xu_x = mi_utility(model, NoiseAllocation::zeros(2));
  CHECK(utility_loss(model, big) == doctest::Approx(i_xu_x).epsilon(1e-4));
}

TEST_CASE("utility loss basics") {
  const CovarianceModel model = dataset1();
  CHECK(utility_loss(model, NoiseAllocation::zeros(2)) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

  // the two computation routes agree
  std::mt19937_64 gen(41);
  for (int rep = 0; rep < 25; ++rep) {
    const CovarianceModel m = testutil::random_model(gen);
    const NoiseAllocation theta = testutil::random_theta(gen, m.n);
    const double direct = utility_loss(m, theta);
    const double via_mi = mi_utility(m, NoiseAllocation::zeros(m.n)) -
                          mi_utility(m, theta);
    CHECK(direct == doctest::Approx(via_mi).scale(1.0).epsilon(1e-9));
    CHECK(direct >= -1e-9);
  }
}

TEST_CASE("degradation monotonicity on random instances") {
  std::mt19937_64 gen(42);
  std::uniform_real_distribution<double> bump(0.01, 20.0);
  int checked = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const CovarianceModel model = testutil::random_model(gen);
    NoiseAllocation theta = testutil::random_theta(gen, model.n);
    const double ip0 = mi_private(model, theta);
    const double iu0 = mi_utility(model, theta);
    std::uniform_int_distribution<std::size_t> pick(0, model.n - 1);
    theta.theta[pick(gen)] += bump(gen);
    CHECK(mi_private(model, theta) <= ip0 + 1e-9);
    CHECK(mi_utility(model, theta) <= iu0 + 1e-9);
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("entropy chain equals the closed form") {
  std::mt19937_64 gen(43);
  for (int rep = 0; rep < 25; ++rep) {
    const CovarianceModel model = testutil::random_model(gen);
    const NoiseAllocation theta = testutil::random_theta(gen, model.n);
    const NoisyCovariances noisy = noisy_covariances(model, theta);
    Matrix joint = noisy.sigma_y_xp;
    const double chain = gaussian_entropy(model.sigma_xp()) +
                         gaussian_entropy(noisy.sigma_y) -
                         gaussian_entropy(joint);
    CHECK(mi_private(model, theta) ==
          doctest::Approx(chain).scale(1.0).epsilon(1e-9));
  }
}

TEST_CASE("bivariate closed form") {
  CovarianceModel model;
  model.n = 1;
  model.n_p = 1;
  model.n_u = 1;
  model.sigma_x = Matrix{{1.0}};
  model.sigma_x_xp = Matrix{{1.0, 0.6}, {0.6, 1.0}};
  model.sigma_x_xu = Matrix{{1.0, 0.3}, {0.3, 1.0}};
  const double expected = -0.5 * std::log(1.0 - 0.36);
  CHECK(mi_private(model, NoiseAllocation::zeros(1)) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("info_point is internally consistent") {
  std::mt19937_64 gen(44);
  for (int rep = 0; rep < 25; ++rep) {
    const CovarianceModel model = testutil::random_model(gen);
    const NoiseAllocation theta = testutil::random_theta(gen, model.n);
    const InfoPoint point = info_point(model, theta);
    const double i_xu_x = mi_utility(model, NoiseAllocation::zeros(model.n));
    CHECK(point.i_xu_y + point.utility_loss ==
          doctest::Approx(i_xu_x).epsilon(1e-9));
    CHECK(point.i_xp_y >= -1e-9);
    CHECK(point.i_xu_y >= -1e-9);
    CHECK(point.utility_loss >= -1e-9);
  }
  // loss at zero noise is zero on the larger bundled model too
  const CovarianceModel d2 = dataset2();
  CHECK(info_point(d2, NoiseAllocation::zeros(6)).utility_loss ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("measures agree with the cofactor oracle on random instances") {
  std::mt19937_64 gen(45);
  for (int rep = 0; rep < 40; ++rep) {
    const CovarianceModel model = testutil::random_model(gen, 1 + rep % 5, 1,
                                                         1);
    const NoiseAllocation theta = testutil::random_theta(gen, model.n);
    CHECK(mi_private(model, theta) ==
          doctest::Approx(oracle_mi_private(model, theta)).scale(1.0).epsilon(
              1e-9));
    CHECK(mi_utility(model, theta) ==
          doctest::Approx(oracle_mi_utility(model, theta)).scale(1.0).epsilon(
              1e-9));
  }
}
