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

#ifndef PRIVUT_MODEL_IO_HPP
#define PRIVUT_MODEL_IO_HPP

#include <string>

#include "privut/covmodel.hpp"

namespace privut {

// Model documents are JSON (// and /* */ comments tolerated on input) with
// integer fields n, n_p, n_u, row-major nested-array matrices sigma_x,
// sigma_x_xp, sigma_x_xu, and an optional means object {x, xp, xu}.
// Numbers are 64-bit floats and round-trip bit-exactly through emit/parse.

// Parses and validates; throws UsageError for malformed documents and
// ValidationError (with the report attached) for invalid models.
CovarianceModel parse_model(const std::string& text);
CovarianceModel load_model(const std::string& path);

std::string emit_model(const CovarianceModel& model);
void save_model(const CovarianceModel& model, const std::string& path);

}  // namespace privut

#endif  // PRIVUT_MODEL_IO_HPP
