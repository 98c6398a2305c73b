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

#ifndef PRIVUT_CSV_HPP
#define PRIVUT_CSV_HPP

#include <string>
#include <vector>

#include "privut/greedy.hpp"
#include "privut/matrix.hpp"

namespace privut {

// Shortest representation that parses back to the identical double.
std::string format_double_exact(double v);

// 12 significant digits, the precision of result CSVs.
std::string format_double_sig12(double v);

struct SampleCsv {
  std::vector<std::string> headers;
  Matrix data;
};

// Headered numeric CSV, one sample row per line.
void write_samples_csv(const std::string& path,
                       const std::vector<std::string>& headers,
                       const Matrix& data);
SampleCsv read_samples_csv(const std::string& path);

// Header names for a sampled block: x1..xn then xp1../xu1..
std::vector<std::string> block_headers(std::size_t n, std::size_t tail,
                                       const std::string& tail_prefix);

// Number of leading headers matching x<digits>; 0 when the layout is not a
// sampled-block CSV.
std::size_t x_block_width(const std::vector<std::string>& headers);

// One row per accepted step. Greedy traces carry the eight step columns;
// passing an algorithm label prepends an algorithm column (the baselines'
// schema).
void write_trace_csv(const std::string& path,
                     const std::vector<TraceStep>& trace,
                     std::string_view algorithm = {});

}  // namespace privut

#endif  // PRIVUT_CSV_HPP
