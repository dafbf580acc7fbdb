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

#include "gsv/dataset.hpp"
#include "gsv/explanation.hpp"
#include "gsv/partition.hpp"
#include "gsv/tree.hpp"

namespace gsv {

enum class Engine { kFast, kOracle };

/// One explanation per dataset row, in row order. Rows are split across
/// `threads` workers; each row's result is independent of the split.
std::vector<Explanation> explain_dataset(const TreeEnsemble& ensemble, const Dataset& dataset,
                                         const FeaturePartition& partition,
                                         Engine engine = Engine::kFast, int threads = 1);

/// rows x groups matrix of per-row group means of the raw feature values.
Eigen::MatrixXd aggregate_group_values(const Dataset& dataset, const FeaturePartition& partition);

/// Per-column min-max scaling to [0, 1]; a constant column maps to 0.5.
Eigen::MatrixXd normalize_colors(const Eigen::Ref<const Eigen::MatrixXd>& aggregates);

struct SwarmPoint {
  GroupIndex group = 0;
  double gsv = 0.0;
  double color_value = 0.5;
  std::string row_id;
};

/// One point per (row, group), row-major.
std::vector<SwarmPoint> swarm_points(const std::vector<Explanation>& explanations,
                                     const Eigen::Ref<const Eigen::MatrixXd>& colors,
                                     const Dataset& dataset);

/// CSV with header `row_id,group,gsv,color_value,raw_aggregate`, one line per
/// point, numbers printed with 17 significant digits.
std::string export_csv(const std::vector<SwarmPoint>& points, const FeaturePartition& partition,
                       const Eigen::Ref<const Eigen::MatrixXd>& aggregates);

}  // namespace gsv
