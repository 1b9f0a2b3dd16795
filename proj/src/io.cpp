// Copyright 2026 The fermidec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fermidec/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fermidec::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_matrix_csv(std::ostream& out, const Mat& m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << format_double(m(r, c));
    }
    out << '\n';
  }
}

Mat read_matrix_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (!rows.empty() && row.size() != rows[0].size())
      throw StructuralError("read_matrix_csv: ragged rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Mat(0, 0);
  Mat m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

static json matrix_data(const Mat& m) {
  json data = json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  return data;
}

static Mat matrix_from_data(const json& data, int dim) {
  if (static_cast<int>(data.size()) != dim * dim)
    throw StructuralError("matrix_from_json: data length does not match dim^2");
  Mat m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = data.at(r * dim + c).get<double>();
  return m;
}

std::string matrix_to_json(const Mat& m, const std::string& kind) {
  if (m.rows() != m.cols()) throw StructuralError("matrix_to_json: not square");
  json j;
  j["dim"] = m.rows();
  j["data"] = matrix_data(m);
  j["kind"] = kind;
  return j.dump();
}

Mat matrix_from_json(const std::string& text, std::string* kind_out) {
  const json j = json::parse(text);
  const int dim = j.at("dim").get<int>();
  if (kind_out) *kind_out = j.at("kind").get<std::string>();
  return matrix_from_data(j.at("data"), dim);
}

std::string channel_to_json(const GaussianChannel& ch) {
  json j;
  j["dim"] = ch.dim();
  j["X"] = matrix_data(ch.x);
  j["Y"] = matrix_data(ch.y);
  j["convention"] = ch.convention == Convention::paper ? "paper" : "calibrated";
  return j.dump();
}

GaussianChannel channel_from_json(const std::string& text) {
  const json j = json::parse(text);
  const int dim = j.at("dim").get<int>();
  GaussianChannel ch;
  ch.x = matrix_from_data(j.at("X"), dim);
  ch.y = matrix_from_data(j.at("Y"), dim);
  const std::string conv = j.at("convention").get<std::string>();
  if (conv == "paper") ch.convention = Convention::paper;
  else if (conv == "calibrated") ch.convention = Convention::calibrated;
  else throw StructuralError("channel_from_json: unknown convention tag");
  return ch;
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (const auto& line : table.manifest) out << "# " << line << '\n';
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw StructuralError("write_csv: row width does not match header");
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_double(row[c]);
    }
    out << '\n';
  }
}

void write_csv_file(const std::string& path, const CsvTable& table) {
  std::ofstream out(path);
  if (!out) throw StructuralError("write_csv_file: cannot open " + path);
  write_csv(out, table);
}

}  // namespace fermidec::io
