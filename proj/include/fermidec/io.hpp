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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fermidec/channel.hpp"
#include "fermidec/types.hpp"

namespace fermidec::io {

/// 17 significant digits, '.' decimal separator, locale independent.
std::string format_double(double v);

/// Dense row-major CSV, one matrix row per line.
void write_matrix_csv(std::ostream& out, const Mat& m);
Mat read_matrix_csv(std::istream& in);

/// JSON wrapper {"dim": 2n, "data": [...row-major...], "kind": ...}.
std::string matrix_to_json(const Mat& m, const std::string& kind);
/// Parses the wrapper; checks dim consistency and the kind tag.
Mat matrix_from_json(const std::string& text, std::string* kind_out = nullptr);

/// Channel serialization {"dim", "X", "Y", "convention"}.
std::string channel_to_json(const GaussianChannel& ch);
GaussianChannel channel_from_json(const std::string& text);

/// CSV table with '#'-prefixed manifest header lines.
struct CsvTable {
  std::vector<std::string> manifest;   // written as "# key: value" lines
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& out, const CsvTable& table);
void write_csv_file(const std::string& path, const CsvTable& table);

}  // namespace fermidec::io
