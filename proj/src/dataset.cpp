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

#include "gsv/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "gsv/error.hpp"

namespace gsv {

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t i = 0;
  auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    if (!(record.size() == 1 && record[0].empty() && !field_started)) records.push_back(std::move(record));
    record.clear();
    field_started = false;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      ++i;
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) throw ParseError("CSV: stray quote inside an unquoted field");
        quoted = true;
        field_started = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        end_record();
        break;
      case '\n':
        end_record();
        break;
      default:
        field += c;
        field_started = true;
    }
    ++i;
  }
  if (quoted) throw ParseError("CSV: unterminated quoted field");
  if (field_started || !field.empty() || !record.empty()) end_record();
  return records;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

Dataset read_dataset_csv(std::string_view text, const std::vector<std::string>& feature_names) {
  const auto records = parse_csv(text);
  if (records.empty()) throw ParseError("CSV: no header row");
  const auto& header = records.front();

  std::unordered_map<std::string, std::size_t> wanted;
  for (std::size_t f = 0; f < feature_names.size(); ++f) wanted.emplace(feature_names[f], f);

  std::vector<std::ptrdiff_t> column_to_feature(header.size(), -1);
  std::ptrdiff_t id_column = -1;
  std::vector<bool> found(feature_names.size(), false);
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "row_id") {
      id_column = static_cast<std::ptrdiff_t>(c);
      continue;
    }
    const auto it = wanted.find(header[c]);
    if (it == wanted.end()) throw ValidationError("CSV: column \"" + header[c] + "\" is not a model feature");
    if (found[it->second]) throw ValidationError("CSV: duplicate column \"" + header[c] + "\"");
    found[it->second] = true;
    column_to_feature[c] = static_cast<std::ptrdiff_t>(it->second);
  }
  for (std::size_t f = 0; f < found.size(); ++f) {
    if (!found[f]) throw ValidationError("CSV: model feature \"" + feature_names[f] + "\" has no column");
  }

  Dataset data;
  data.feature_names = feature_names;
  data.rows.resize(static_cast<Eigen::Index>(records.size() - 1),
                   static_cast<Eigen::Index>(feature_names.size()));
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size()) {
      throw ParseError("CSV: line " + std::to_string(r + 1) + " has " + std::to_string(rec.size()) +
                       " fields, header has " + std::to_string(header.size()));
    }
    for (std::size_t c = 0; c < rec.size(); ++c) {
      if (static_cast<std::ptrdiff_t>(c) == id_column) {
        data.row_ids.push_back(rec[c]);
        continue;
      }
      double v = 0.0;
      const char* b = rec[c].data();
      const char* e = b + rec[c].size();
      const auto [ptr, ec] = std::from_chars(b, e, v);
      if (ec != std::errc() || ptr != e || !std::isfinite(v)) {
        throw ParseError("CSV: line " + std::to_string(r + 1) + " column \"" + header[c] +
                         "\" is not a finite number (dense input required)");
      }
      data.rows(static_cast<Eigen::Index>(r - 1), column_to_feature[c]) = v;
    }
  }
  return data;
}

std::string write_dataset_csv(const Dataset& dataset) {
  std::string out = "row_id";
  for (const auto& n : dataset.feature_names) out += "," + csv_field(n);
  out += "\n";
  char buf[32];
  for (Eigen::Index r = 0; r < dataset.rows.rows(); ++r) {
    out += csv_field(dataset.row_id(r));
    for (Eigen::Index c = 0; c < dataset.rows.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", dataset.rows(r, c));
      out += ",";
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace gsv
