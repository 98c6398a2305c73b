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
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "privut/csv.hpp"
#include "privut/datasets.hpp"
#include "privut/sweep.hpp"
#include "test_util.hpp"

using namespace privut;

namespace {

bool rows_equal_ignoring_time(const std::vector<CurveRow>& a,
                              const std::vector<CurveRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].algorithm != b[i].algorithm || a[i].delta != b[i].delta ||
        a[i].gamma != b[i].gamma || a[i].eps0 != b[i].eps0 ||
        a[i].i_xp_y != b[i].i_xp_y || a[i].i_xu_y != b[i].i_xu_y ||
        a[i].utility_loss != b[i].utility_loss ||
        a[i].cumulative_ratio != b[i].cumulative_ratio ||
        a[i].iterations != b[i].iterations ||
        a[i].termination != b[i].termination || a[i].seed != b[i].seed) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("the default delta grid spans saturation") {
  const CovarianceModel model = dataset1();
  const std::vector<double> grid = default_delta_grid(model);
  REQUIRE(grid.size() == kDefaultDeltaPoints);
  CHECK(grid.front() == 0.0);
  const double i_xu_x = mi_utility(model, NoiseAllocation::zeros(2));
  CHECK(grid.back() == doctest::Approx(1.1 * i_xu_x).epsilon(1e-12));
}

TEST_CASE("grid validation") {
  SweepSpec spec;
  SUBCASE("baselines forbid a nonzero gamma grid") {
    spec.algorithms = {Algorithm::greedy, Algorithm::gd};
    spec.gamma_grid = {0.0, 0.5};
    CHECK_THROWS_AS(spec.validate(), UsageError);
  }
  SUBCASE("baselines forbid the fisher metric") {
    spec.algorithms = {Algorithm::sa};
    spec.utility_metric = UtilityMetric::fisher_information;
    CHECK_THROWS_AS(spec.validate(), UsageError);
  }
  SUBCASE("descending deltas are rejected") {
    spec.delta_grid = {0.5, 0.1};
    CHECK_THROWS_AS(spec.validate(), UsageError);
  }
  SUBCASE("empty grids are rejected") {
    spec.eps0_grid = {};
    CHECK_THROWS_AS(spec.validate(), UsageError);
  }
}

TEST_CASE("a small sweep covers every cell in sorted order") {
  const CovarianceModel model = dataset1();
  SweepSpec spec;
  spec.delta_grid = {0.0, 0.4, 0.8};
  spec.gamma_grid = {0.0, 2.0};
  spec.algorithms = {Algorithm::greedy};
  const std::vector<CurveRow> rows = run_sweep(model, spec, 1);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool ordered =
        rows[i - 1].gamma < rows[i].gamma ||
        (rows[i - 1].gamma == rows[i].gamma &&
         rows[i - 1].delta <= rows[i].delta);
    CHECK(ordered);
  }
  for (const CurveRow& row : rows) {
    CHECK(row.termination != "error");
    CHECK(std::isfinite(row.i_xp_y));
    CHECK(row.iterations > 0);
    CHECK(row.wall_time_seconds >= 0.0);
  }
}

TEST_CASE("parallel sweeps match the single-threaded result") {
  const CovarianceModel model = dataset1();
  SweepSpec spec;
  spec.delta_grid = {0.0, 0.3, 0.6, 0.9};
  spec.algorithms = {Algorithm::greedy, Algorithm::gd};
  spec.gd.iters = 40;
  spec.gd.outer_rounds = 2;
  const std::vector<CurveRow> serial = run_sweep(model, spec, 1);
  const std::vector<CurveRow> parallel = run_sweep(model, spec, 4);
  CHECK(rows_equal_ignoring_time(serial, parallel));
  REQUIRE(serial.size() == 8);
  // gd sorts before greedy lexicographically
  CHECK(serial[0].algorithm == Algorithm::gd);
  CHECK(serial[4].algorithm == Algorithm::greedy);
}

TEST_CASE("cells that cannot run are recorded as error rows") {
  std::mt19937_64 gen(81);
  const CovarianceModel model = testutil::random_model(gen, 2, 1, 2);
  SweepSpec spec;
  spec.delta_grid = {0.0, 0.5};
  spec.utility_metric = UtilityMetric::fisher_information;  // needs n_u = 1
  const std::vector<CurveRow> rows = run_sweep(model, spec, 1);
  REQUIRE(rows.size() == 2);
  for (const CurveRow& row : rows) {
    CHECK(row.termination == "error");
    CHECK(row.i_xp_y == 0.0);
  }
}

TEST_CASE("multiple seeds produce one row each") {
  const CovarianceModel model = dataset1();
  SweepSpec spec;
  spec.delta_grid = {0.5};
  spec.algorithms = {Algorithm::sa};
  spec.sa.iters = 2'000;
  spec.seeds = {1, 2, 3};
  const std::vector<CurveRow> rows = run_sweep(model, spec, 1);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].seed == 1);
  CHECK(rows[2].seed == 3);
  // distinct seeds explore differently
  const bool all_same = rows[0].i_xp_y == rows[1].i_xp_y &&
                        rows[1].i_xp_y == rows[2].i_xp_y;
  CHECK_FALSE(all_same);
}

TEST_CASE("the curve CSV has the documented column layout") {
  const CovarianceModel model = dataset1();
  SweepSpec spec;
  spec.delta_grid = {0.0, 0.5};
  const std::vector<CurveRow> rows = run_sweep(model, spec, 1);
  const std::string path = "sweep_test_curve.csv";
  write_curve_csv(path, rows);

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "algorithm,delta,gamma,eps0,utility_metric,i_xp_y,i_xu_y,"
        "utility_loss,cumulative_ratio,iterations,wall_time_seconds,"
        "termination");
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++count;
    CHECK(line.substr(0, 7) == "greedy,");
  }
  CHECK(count == rows.size());
  std::remove(path.c_str());
}

TEST_CASE("the delta = 0 row reports an infinite cumulative ratio") {
  const CovarianceModel model = dataset1();
  SweepSpec spec;
  spec.delta_grid = {0.0};
  const std::vector<CurveRow> rows = run_sweep(model, spec, 1);
  REQUIRE(rows.size() == 1);
  CHECK(std::isinf(rows[0].cumulative_ratio));
  const std::string path = "sweep_test_inf.csv";
  write_curve_csv(path, rows);
  std::ifstream in(path);
  std::string header, line;
  std::getline(in, header);
  std::getline(in, line);
  CHECK(line.find(",inf,") != std::string::npos);
  std::remove(path.c_str());
}
