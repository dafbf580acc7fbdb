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

#include "gsv/explanation.hpp"

#include "gsv/error.hpp"

namespace gsv {

using nlohmann::ordered_json;

ordered_json to_json(const Explanation& e) {
  ordered_json j;
  j["base"] = e.base;
  j["prediction"] = e.prediction;
  auto& groups = j["groups"] = ordered_json::array();
  for (std::size_t g = 0; g < e.groups.size(); ++g) {
    groups.push_back({{"name", e.groups[g]}, {"gsv", e.gsv[static_cast<Eigen::Index>(g)]}});
  }
  return j;
}

Explanation explanation_from_json(const ordered_json& j) {
  try {
    Explanation e;
    e.base = j.at("base").get<double>();
    e.prediction = j.at("prediction").get<double>();
    const auto& groups = j.at("groups");
    e.gsv.resize(static_cast<Eigen::Index>(groups.size()));
    for (std::size_t g = 0; g < groups.size(); ++g) {
      e.groups.push_back(groups[g].at("name").get<std::string>());
      e.gsv[static_cast<Eigen::Index>(g)] = groups[g].at("gsv").get<double>();
    }
    return e;
  } catch (const ordered_json::exception& ex) {
    throw ParseError(std::string("malformed explanation JSON: ") + ex.what());
  }
}

std::string explanation_json(const Explanation& e) { return to_json(e).dump(2) + "\n"; }

std::string explanations_json(const std::vector<Explanation>& es) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : es) arr.push_back(to_json(e));
  return arr.dump(2) + "\n";
}

}  // namespace gsv
