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

// Seeded generators for test and benchmark fixtures. Only the raw
// mt19937_64 stream is used (its output is fixed by the standard), with the
// conversions to doubles and ranges done here, so fixtures are identical
// across standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "gsv/dataset.hpp"
#include "gsv/partition.hpp"
#include "gsv/tree.hpp"

namespace gsv::synthetic {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform in [0, n).
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed and an instance index into an independent stream seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct TreeShape {
  int max_depth = 6;
  double split_probability = 0.8;  // below the root, which always splits
  double leaf_min = -10.0;
  double leaf_max = 10.0;
  double cover_min = 0.5;
  double cover_max = 20.0;
};

/// Random tree; thresholds in (0, 1), leaf covers random positive, internal
/// covers the exact sum of their children.
Tree random_tree(Rng& rng, int feature_count, const TreeShape& shape = {});

/// Perfect binary tree of the given depth, random features and leaves.
Tree full_tree(Rng& rng, int feature_count, int depth);

TreeEnsemble random_ensemble(Rng& rng, int tree_count, int feature_count, const TreeShape& shape = {},
                             Comparator comparator = Comparator::kLessEqual);

/// Uniform random vector in [0, 1)^n.
Eigen::VectorXd random_point(Rng& rng, int feature_count);

/// k nonempty groups over shuffled features, named g0..g{k-1}.
FeaturePartition random_partition(Rng& rng, int feature_count, int group_count);

/// Random rows in [0, 1) with the given feature names.
Dataset random_dataset(Rng& rng, int rows, const std::vector<std::string>& feature_names);

/// Remote-sensing shaped layout: `bands` groups of `features_per_band`
/// features followed by one handcrafted group of `handcrafted` features.
/// Defaults give 11 x 102 + 9 = 1131 features in 12 groups.
struct SoybeanShape {
  int bands = 11;
  int features_per_band = 102;
  int handcrafted = 9;
  int feature_count() const { return bands * features_per_band + handcrafted; }
};
std::vector<std::string> soybean_feature_names(const SoybeanShape& shape = {});
FeaturePartition soybean_partition(const SoybeanShape& shape = {});

/// Time-step layout: `timestamps` groups of `features_per_timestamp`
/// consecutive features each.
std::vector<std::string> timestamp_feature_names(int timestamps = 7, int features_per_timestamp = 6);
FeaturePartition timestamp_partition(int timestamps = 7, int features_per_timestamp = 6);

}  // namespace gsv::synthetic
