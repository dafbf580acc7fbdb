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

#include <span>

#include <Eigen/Core>

#include "gsv/explanation.hpp"
#include "gsv/partition.hpp"
#include "gsv/tree.hpp"

namespace gsv {

/// Exponential enumeration guard for the brute-force engine.
inline constexpr int kMaxOracleGroups = 20;

/// |S|! (k - |S| - 1)! / k!, the weight of a coalition of subset_size other
/// groups out of k.
double subset_weight(int group_count, int subset_size);

/// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

/// Exact grouped Shapley values by enumerating all group subsets, with
/// v(S) = expected_value_ensemble(x, union of S). Every v is computed once
/// per call and shared between the k group sums.
Explanation brute_force_gsv(const TreeEnsemble& ensemble, const Eigen::Ref<const Eigen::VectorXd>& x,
                            const FeaturePartition& partition);

/// brute_force_gsv under the one-feature-per-group partition.
Explanation brute_force_classic(const TreeEnsemble& ensemble,
                                const Eigen::Ref<const Eigen::VectorXd>& x);

}  // namespace gsv
