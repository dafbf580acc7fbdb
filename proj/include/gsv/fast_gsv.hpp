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

#include <Eigen/Core>

#include "gsv/explanation.hpp"
#include "gsv/partition.hpp"
#include "gsv/tree.hpp"

namespace gsv {

/// Grouped Shapley contributions of one tree, one entry per partition group,
/// in a single O(L D^2) traversal. Excludes the tree's share of the base.
Eigen::VectorXd tree_gsv(const TreeEnsemble& ensemble, const Tree& tree,
                         const Eigen::Ref<const Eigen::VectorXd>& x, const FeaturePartition& partition);

/// Sums tree_gsv over the trees in index order and fills in base and
/// prediction. O(T L D^2).
Explanation ensemble_gsv(const TreeEnsemble& ensemble, const Eigen::Ref<const Eigen::VectorXd>& x,
                         const FeaturePartition& partition);

}  // namespace gsv
