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

#include "gsv/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gsv/error.hpp"
#include "gsv/fast_gsv.hpp"
#include "gsv/oracle.hpp"
#include "gsv/synthetic.hpp"

namespace gsv {

double relative_deviation(const Explanation& fast, const Explanation& oracle) {
  if (fast.gsv.size() != oracle.gsv.size()) throw ArgumentError("relative_deviation: group counts differ");
  if (fast.gsv.size() == 0) return 0.0;
  const double diff = (fast.gsv - oracle.gsv).cwiseAbs().maxCoeff();
  const double scale = std::max(oracle.gsv.cwiseAbs().maxCoeff(), std::abs(oracle.prediction));
  return scale > 0.0 ? diff / scale : diff;
}

bool efficiency_holds(const Explanation& e, double tolerance) {
  return std::abs(e.efficiency_residual()) <= tolerance * std::abs(e.prediction) + 1e-12;
}

ValidationReport run_validation(const ValidationConfig& config) {
  if (config.samples < 0) throw ArgumentError("samples must be non-negative");
  if (config.max_trees < 1 || config.max_depth < 0 || config.max_features < 1 || config.max_groups < 1) {
    throw ArgumentError("validation limits must be positive");
  }
  if (!config.singleton_groups && config.max_groups > kMaxOracleGroups) {
    throw ArgumentError("max groups exceeds the oracle limit of " + std::to_string(kMaxOracleGroups));
  }
  if (config.singleton_groups && config.max_features > kMaxOracleGroups) {
    throw ArgumentError("max features exceeds the oracle limit of " + std::to_string(kMaxOracleGroups));
  }
  if (!(config.tolerance >= 0.0)) throw ArgumentError("tolerance must be non-negative");

  ValidationReport report;
  const int begin = config.only_index.value_or(0);
  const int end = config.only_index ? begin + 1 : config.samples;
  for (int i = begin; i < end; ++i) {
    synthetic::Rng rng(synthetic::derive_seed(config.seed, static_cast<std::uint64_t>(i)));
    const int features = rng.between(1, config.max_features);
    const int trees = rng.between(1, config.max_trees);
    synthetic::TreeShape shape;
    shape.max_depth = rng.between(0, config.max_depth);
    shape.split_probability = rng.uniform(0.5, 0.95);
    const auto comparator = rng.chance(0.5) ? Comparator::kLessEqual : Comparator::kLessThan;
    const TreeEnsemble ensemble = synthetic::random_ensemble(rng, trees, features, shape, comparator);
    const FeaturePartition partition =
        config.singleton_groups
            ? FeaturePartition::singletons(ensemble.resolved_feature_names())
            : synthetic::random_partition(rng, features, rng.between(1, std::min(features, config.max_groups)));
    Eigen::VectorXd x = synthetic::random_point(rng, features);
    // Land some coordinates exactly on thresholds to exercise the comparator.
    for (const Tree& tree : ensemble.trees()) {
      for (const TreeNode& n : tree.nodes) {
        if (!n.is_leaf() && rng.chance(0.1)) x[n.feature] = n.threshold;
      }
    }

    const Explanation fast = ensemble_gsv(ensemble, x, partition);
    const Explanation oracle = config.singleton_groups ? brute_force_classic(ensemble, x)
                                                       : brute_force_gsv(ensemble, x, partition);
    const double dev = relative_deviation(fast, oracle);
    const double residual = std::max(std::abs(fast.efficiency_residual()), std::abs(oracle.efficiency_residual()));
    report.max_deviation = std::max(report.max_deviation, dev);
    report.max_efficiency_residual = std::max(report.max_efficiency_residual, residual);
    ++report.samples;

    const bool ok = dev <= config.tolerance && efficiency_holds(fast, config.tolerance) &&
                    efficiency_holds(oracle, config.tolerance);
    if (!ok && !report.first_failure) {
      report.first_failure = i;
      char buf[256];
      std::snprintf(buf, sizeof buf,
                    "seed %llu index %d: deviation %.3e, efficiency residual %.3e (trees=%d features=%d groups=%d)",
                    static_cast<unsigned long long>(config.seed), i, dev, residual, trees, features,
                    partition.group_count());
      report.failure_detail = buf;
    }
  }
  return report;
}

}  // namespace gsv
