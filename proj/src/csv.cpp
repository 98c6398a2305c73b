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

#include "privut/csv.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace privut {

std::string format_double_exact(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string format_double_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

void write_samples_csv(const std::string& path,
                       const std::vector<std::string>& headers,
                       const Matrix& data) {
  if (headers.size() != data.cols()) {
    throw UsageError("header count does not match column count");
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write CSV file: " + path);
  for (std::size_t j = 0; j < headers.size(); ++j) {
    if (j) out << ',';
    out << headers[j];
  }
  out << '\n';
  for (std::size_t i = 0; i < data.rows(); ++i) {
    for (std::size_t j = 0; j < data.cols(); ++j) {
      if (j) out << ',';
      out << format_double_exact(data(i, j));
    }
    out << '\n';
  }
}

SampleCsv read_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open CSV file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw UsageError("empty CSV file: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();

  SampleCsv out;
  std::stringstream header(line);
  std::string cell;
  while (std::getline(header, cell, ',')) out.headers.push_back(cell);
  if (out.headers.empty()) throw UsageError("CSV header row is empty");

  std::vector<double> values;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream row(line);
    std::size_t cols = 0;
    while (std::getline(row, cell, ',')) {
      const char* start = cell.c_str();
      char* end = nullptr;
      const double v = std::strtod(start, &end);
      if (end == start) {
        throw UsageError("CSV row " + std::to_string(rows + 1) +
                         " has a non-numeric cell: '" + cell + "'");
      }
      values.push_back(v);
      ++cols;
    }
    if (cols != out.headers.size()) {
      throw UsageError("CSV row " + std::to_string(rows + 1) + " has " +
                       std::to_string(cols) + " cells, expected " +
                       std::to_string(out.headers.size()));
    }
    ++rows;
  }
  out.data = Matrix(rows, out.headers.size());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < out.headers.size(); ++j)
      out.data(i, j) = values[i * out.headers.size() + j];
  return out;
}

std::vector<std::string> block_headers(std::size_t n, std::size_t tail,
                                       const std::string& tail_prefix) {
  std::vector<std::string> headers;
  headers.reserve(n + tail);
  for (std::size_t i = 1; i <= n; ++i) headers.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= tail; ++i)
    headers.push_back(tail_prefix + std::to_string(i));
  return headers;
}

void write_trace_csv(const std::string& path,
                     const std::vector<TraceStep>& trace,
                     std::string_view algorithm) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write CSV file: " + path);
  if (!algorithm.empty()) out << "algorithm,";
  out << "iteration,variable,dtheta,privacy_gain,utility_loss_step,"
         "gain_factor,i_xp_y,utility_loss_cum\n";
  for (const TraceStep& step : trace) {
    if (!algorithm.empty()) out << algorithm << ',';
    out << step.iteration << ',' << step.variable << ','
        << format_double_sig12(step.dtheta) << ','
        << format_double_sig12(step.privacy_gain) << ','
        << format_double_sig12(step.utility_loss_step) << ','
        << format_double_sig12(step.gain_factor) << ','
        << format_double_sig12(step.i_xp_y) << ','
        << format_double_sig12(step.utility_loss_cum) << '\n';
  }
}

std::size_t x_block_width(const std::vector<std::string>& headers) {
  std::size_t n = 0;
  for (const std::string& h : headers) {
    if (h.size() < 2 || h[0] != 'x' || !std::isdigit(h[1])) break;
    bool digits = true;
    for (std::size_t i = 1; i < h.size(); ++i) {
      if (!std::isdigit(h[i])) {
        digits = false;
        break;
      }
    }
    if (!digits) break;
    ++n;
  }
  return n;
}

}  // namespace privut
