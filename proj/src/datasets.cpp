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

#include "privut/datasets.hpp"

#include <string>

namespace privut {

CovarianceModel dataset1() {
  CovarianceModel model;
  model.n = 2;
  model.n_p = 1;
  model.n_u = 1;
  model.sigma_x = Matrix{{138.27, 165.66},  //
                         {165.66, 240.07}};
  model.sigma_x_xp = Matrix{{138.27, 165.66, 26.36},
                            {165.66, 240.07, 43.86},
                            {26.36, 43.86, 8.76}};
  model.sigma_x_xu = Matrix{{138.27, 165.66, 11.28},
                            {165.66, 240.07, 6.84},
                            {11.28, 6.84, 2.26}};
  return model;
}

CovarianceModel dataset2() {
  CovarianceModel model;
  model.n = 6;
  model.n_p = 1;
  model.n_u = 1;
  model.sigma_x = Matrix{{66.42, 57.38, 83.90, 80.03, 0.06, 121.43},
                         {57.38, 229.20, 146.94, 232.62, 0.04, 69.30},
                         {83.90, 146.94, 142.89, 169.83, 0.06, 140.22},
                         {80.03, 232.62, 169.83, 247.38, 0.06, 114.44},
                         {0.06, 0.04, 0.06, 0.06, 0.12, 0.10},
                         {121.43, 69.30, 140.22, 114.44, 0.10, 233.30}};
  model.sigma_x_xp =
      Matrix{{66.42, 57.38, 83.90, 80.03, 0.06, 121.43, 9.26},
             {57.38, 229.20, 146.94, 232.62, 0.04, 69.30, 45.07},
             {83.90, 146.94, 142.89, 169.83, 0.06, 140.22, 27.17},
             {80.03, 232.62, 169.83, 247.38, 0.06, 114.44, 45.18},
             {0.06, 0.04, 0.06, 0.06, 0.12, 0.10, 0.01},
             {121.43, 69.30, 140.22, 114.44, 0.10, 233.30, 9.44},
             {9.26, 45.07, 27.17, 45.18, 0.01, 9.44, 9.01}};
  // Utility-feature variance 2.24: the smallest two-decimal value that keeps
  // this matrix positive definite given the cross-covariances.
  model.sigma_x_xu =
      Matrix{{66.42, 57.38, 83.90, 80.03, 0.06, 121.43, 11.22},
             {57.38, 229.20, 146.94, 232.62, 0.04, 69.30, 2.42},
             {83.90, 146.94, 142.89, 169.83, 0.06, 140.22, 11.31},
             {80.03, 232.62, 169.83, 247.38, 0.06, 114.44, 6.93},
             {0.06, 0.04, 0.06, 0.06, 0.12, 0.10, 0.01},
             {121.43, 69.30, 140.22, 114.44, 0.10, 233.30, 22.38},
             {11.22, 2.42, 11.31, 6.93, 0.01, 22.38, 2.24}};
  return model;
}

std::vector<std::string_view> dataset_names() { return {"dataset1", "dataset2"}; }

CovarianceModel dataset_by_name(std::string_view name) {
  if (name == "dataset1") return dataset1();
  if (name == "dataset2") return dataset2();
  throw UsageError("unknown dataset '" + std::string(name) +
                   "' (available: dataset1, dataset2)");
}

}  // namespace privut
