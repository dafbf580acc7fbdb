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
#include <vector>

#include <Eigen/Core>

#include "json.hpp"

namespace gsv {

/// Local explanation of one data point: base = v(empty set), one grouped
/// Shapley value per group in partition order, and the model prediction.
struct Explanation {
  double base = 0.0;
  double prediction = 0.0;
  std::vector<std::string> groups;
  Eigen::VectorXd gsv;

  /// base + sum(gsv) - prediction; zero up to rounding.
  double efficiency_residual() const { return base + gsv.sum() - prediction; }
};

/// { "base": number, "prediction": number, "groups": [ {"name", "gsv"} ... ] }
nlohmann::ordered_json to_json(const Explanation& e);
Explanation explanation_from_json(const nlohmann::ordered_json& j);

std::string explanation_json(const Explanation& e);
std::string explanations_json(const std::vector<Explanation>& es);

}  // namespace gsv
