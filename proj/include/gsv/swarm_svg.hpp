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
#include <string>
#include <vector>

#include "gsv/aggregate.hpp"

namespace gsv {

struct SwarmOptions {
  int width = 900;
  int row_height = 56;
  int label_width = 180;
  double point_radius = 2.5;
  std::uint64_t seed = 42;
  std::string title = "Grouped Shapley values";
  std::string x_label = "GSV (model output units)";
};

/// Static SVG 1.1 document with one horizontal swarm per group, stacked in
/// partition order. The x axis is symmetric around zero; vertical jitter is
/// a hash of (seed, row_id, group), so identical input gives identical bytes.
std::string render_swarm_svg(const std::vector<SwarmPoint>& points,
                             const std::vector<std::string>& group_names,
                             const SwarmOptions& options = {});

/// Blue (0) to red (1) through a light grey midpoint, as "#rrggbb".
std::string color_hex(double color_value);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace gsv
