// Copyright 2026 The GSV Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace gsv {

/// Dense rows to explain, one row per data point. Labels are never read.
struct Dataset {
  Eigen::MatrixXd rows;  // n x feature_count
  std::vector<std::string> feature_names;
  std::vector<std::string> row_ids;  // empty means "use the row number"

  Eigen::Index size() const { return rows.rows(); }
  std::string row_id(Eigen::Index i) const {
    return row_ids.empty() ? std::to_string(i) : row_ids[static_cast<std::size_t>(i)];
  }
};

/// RFC 4180 records: comma separated, double-quoted fields may contain
/// commas, quotes ("") and line breaks. Blank trailing lines are dropped.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Quotes a field when it contains a comma, quote or line break.
std::string csv_field(std::string_view field);

/// Header-aligned CSV read: every model feature must appear as a column
/// (in any order); an optional "row_id" column supplies row identifiers.
/// Any other column is an error.
Dataset read_dataset_csv(std::string_view text, const std::vector<std::string>& feature_names);

std::string write_dataset_csv(const Dataset& dataset);

}  // namespace gsv
