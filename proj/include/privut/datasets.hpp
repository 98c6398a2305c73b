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

#ifndef PRIVUT_DATASETS_HPP
#define PRIVUT_DATASETS_HPP

#include <string_view>
#include <vector>

#include "privut/covmodel.hpp"

namespace privut {

// Bundled example models: a small 2-feature model and a 6-feature model,
// each with one private and one utility feature. Used by the tests, the
// benchmark sweeps and the documentation examples.
CovarianceModel dataset1();
CovarianceModel dataset2();

std::vector<std::string_view> dataset_names();
CovarianceModel dataset_by_name(std::string_view name);

}  // namespace privut

#endif  // PRIVUT_DATASETS_HPP
