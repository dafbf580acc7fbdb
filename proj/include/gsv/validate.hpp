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

#include <cstdint>
#include <optional>
#include <string>

#include "gsv/explanation.hpp"

namespace gsv {

/// Randomized fast-vs-oracle equivalence run. Instance i is generated from
/// derive_seed(seed, i), so any failing index can be replayed on its own.
struct ValidationConfig {
  int samples = 1000;
  int max_trees = 5;
  int max_depth = 6;
  int max_features = 10;
  int max_groups = 5;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  bool singleton_groups = false;  // one group per feature (classic Shapley values)
  std::optional<int> only_index;
};

struct ValidationReport {
  int samples = 0;
  double max_deviation = 0.0;           // max relative fast-vs-oracle deviation
  double max_efficiency_residual = 0.0; // max |base + sum - prediction|, both engines
  std::optional<int> first_failure;     // instance index of the first violation
  std::string failure_detail;

  bool passed() const { return !first_failure.has_value(); }
};

/// max_g |fast_g - oracle_g| / max(max_g |oracle_g|, |prediction|); absolute
/// when both scales are zero.
double relative_deviation(const Explanation& fast, const Explanation& oracle);

/// True when |base + sum - prediction| <= tolerance * |prediction| + 1e-12.
bool efficiency_holds(const Explanation& e, double tolerance);

ValidationReport run_validation(const ValidationConfig& config);

}  // namespace gsv
