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

#include "privut/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace privut {
namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) {
    throw UsageError(std::string("model document missing field '") + name +
                     "'");
  }
  return *it;
}

std::size_t parse_dim(const json& doc, const char* name) {
  const json& field = require_field(doc, name);
  if (!field.is_number_integer() || field.get<long long>() < 0) {
    throw UsageError(std::string("field '") + name +
                     "' must be a non-negative integer");
  }
  return field.get<std::size_t>();
}

Matrix parse_matrix(const json& doc, const char* name) {
  const json& field = require_field(doc, name);
  if (!field.is_array() || field.empty()) {
    throw UsageError(std::string("field '") + name +
                     "' must be a non-empty array of rows");
  }
  const std::size_t rows = field.size();
  const std::size_t cols = field[0].is_array() ? field[0].size() : 0;
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = field[i];
    if (!row.is_array() || row.size() != cols) {
      throw UsageError(std::string("field '") + name + "' row " +
                       std::to_string(i) + " has inconsistent length");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (!row[j].is_number()) {
        throw UsageError(std::string("field '") + name + "' entry (" +
                         std::to_string(i) + "," + std::to_string(j) +
                         ") is not a number");
      }
      m(i, j) = row[j].get<double>();
    }
  }
  return m;
}

std::vector<double> parse_vector(const json& field, const std::string& name) {
  if (!field.is_array()) {
    throw UsageError("field '" + name + "' must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(field.size());
  for (const auto& v : field) {
    if (!v.is_number()) {
      throw UsageError("field '" + name + "' contains a non-number");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

CovarianceModel parse_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text, nullptr, /*allow_exceptions=*/true,
                      /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed model document: ") + e.what());
  }
  if (!doc.is_object()) {
    throw UsageError("model document must be a JSON object");
  }
  CovarianceModel model;
  model.n = parse_dim(doc, "n");
  model.n_p = parse_dim(doc, "n_p");
  model.n_u = parse_dim(doc, "n_u");
  model.sigma_x = parse_matrix(doc, "sigma_x");
  model.sigma_x_xp = parse_matrix(doc, "sigma_x_xp");
  model.sigma_x_xu = parse_matrix(doc, "sigma_x_xu");
  if (auto it = doc.find("means"); it != doc.end()) {
    if (!it->is_object()) {
      throw UsageError("field 'means' must be an object with x/xp/xu arrays");
    }
    if (auto x = it->find("x"); x != it->end())
      model.means.x = parse_vector(*x, "means.x");
    if (auto xp = it->find("xp"); xp != it->end())
      model.means.xp = parse_vector(*xp, "means.xp");
    if (auto xu = it->find("xu"); xu != it->end())
      model.means.xu = parse_vector(*xu, "means.xu");
  }
  const ValidationReport report = validate_model(model);
  if (!report.ok()) {
    throw ValidationError("model document failed validation: " +
                          report.to_string());
  }
  return model;
}

CovarianceModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string emit_model(const CovarianceModel& model) {
  json doc;
  doc["n"] = model.n;
  doc["n_p"] = model.n_p;
  doc["n_u"] = model.n_u;
  doc["sigma_x"] = matrix_to_json(model.sigma_x);
  doc["sigma_x_xp"] = matrix_to_json(model.sigma_x_xp);
  doc["sigma_x_xu"] = matrix_to_json(model.sigma_x_xu);
  if (!model.means.empty()) {
    json means;
    if (!model.means.x.empty()) means["x"] = model.means.x;
    if (!model.means.xp.empty()) means["xp"] = model.means.xp;
    if (!model.means.xu.empty()) means["xu"] = model.means.xu;
    doc["means"] = std::move(means);
  }
  return doc.dump(2) + "\n";
}

void save_model(const CovarianceModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write model file: " + path);
  out << emit_model(model);
}

}  // namespace privut
