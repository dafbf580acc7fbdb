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

namespace gsv::testing {

// Two-feature tree: root splits f0 <= 0.5 (cover 10); its left child splits
// f1 <= 0.5 (cover 6) into leaves 1.0 (cover 2) and 3.0 (cover 4); its right
// child is the leaf 5.0 (cover 4).
inline const std::string kFixtureTree = R"({
  "base_value": 0.0,
  "feature_names": ["f0", "f1"],
  "trees": [ { "nodes": [
    {"feature": 0, "threshold": 0.5, "left": 1, "right": 2, "value": 0.0, "cover": 10},
    {"feature": 1, "threshold": 0.5, "left": 3, "right": 4, "value": 0.0, "cover": 6},
    {"left": null, "right": null, "value": 5.0, "cover": 4},
    {"left": null, "right": null, "value": 1.0, "cover": 2},
    {"left": null, "right": null, "value": 3.0, "cover": 4}
  ] } ]
})";

// Hand values for x = (0.3, 0.8) on kFixtureTree.
inline constexpr double kFixtureV_Empty = 3.4;         // (2*1 + 4*3 + 4*5) / 10
inline constexpr double kFixtureV_F0 = 7.0 / 3.0;      // (2/6)*1 + (4/6)*3
inline constexpr double kFixtureV_F1 = 3.8;            // (6/10)*3 + (4/10)*5
inline constexpr double kFixtureV_All = 3.0;
inline constexpr double kFixturePhiF0 = 0.5 * ((kFixtureV_F0 - kFixtureV_Empty) + (kFixtureV_All - kFixtureV_F1));
inline constexpr double kFixturePhiF1 = 0.5 * ((kFixtureV_F1 - kFixtureV_Empty) + (kFixtureV_All - kFixtureV_F0));
// The same values as exact fractions: -14/15 and 8/15.
inline constexpr double kFixturePhiF0Exact = -14.0 / 15.0;
inline constexpr double kFixturePhiF1Exact = 8.0 / 15.0;

// Depth-1 stump: f0 <= 0.5 -> 2.0 (cover 3), else 10.0 (cover 1).
inline const std::string kStump = R"({
  "base_value": 0.0,
  "feature_names": ["f0", "f1", "f2"],
  "trees": [ { "nodes": [
    {"feature": 0, "threshold": 0.5, "left": 1, "right": 2, "value": 0.0, "cover": 4},
    {"left": null, "right": null, "value": 2.0, "cover": 3},
    {"left": null, "right": null, "value": 10.0, "cover": 1}
  ] } ]
})";

}  // namespace gsv::testing
