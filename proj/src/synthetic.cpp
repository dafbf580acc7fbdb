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

#include "gsv/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <string>

namespace gsv::synthetic {
namespace {

// Appends the subtree rooted at a new node and returns its index.
NodeIndex grow(Rng& rng, Tree& tree, int feature_count, const TreeShape& shape, int depth, bool force_full) {
  const auto self = static_cast<NodeIndex>(tree.nodes.size());
  tree.nodes.emplace_back();
  const bool split = depth < shape.max_depth &&
                     (force_full || depth == 0 || rng.chance(shape.split_probability));
  TreeNode node;
  if (!split) {
    node.value = rng.uniform(shape.leaf_min, shape.leaf_max);
    node.cover = rng.uniform(shape.cover_min, shape.cover_max);
    tree.nodes[static_cast<std::size_t>(self)] = node;
    return self;
  }
  node.feature = static_cast<FeatureIndex>(rng.below(feature_count));
  node.threshold = rng.uniform(0.05, 0.95);
  node.left = grow(rng, tree, feature_count, shape, depth + 1, force_full);
  node.right = grow(rng, tree, feature_count, shape, depth + 1, force_full);
  node.cover = tree.node(node.left).cover + tree.node(node.right).cover;
  tree.nodes[static_cast<std::size_t>(self)] = node;
  return self;
}

void shuffle(Rng& rng, std::vector<FeatureIndex>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[static_cast<std::size_t>(rng.below(static_cast<int>(i)))]);
  }
}

std::string numbered(const char* prefix, int i, int width) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%0*d", prefix, width, i);
  return buf;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Tree random_tree(Rng& rng, int feature_count, const TreeShape& shape) {
  Tree tree;
  grow(rng, tree, feature_count, shape, 0, false);
  return tree;
}

Tree full_tree(Rng& rng, int feature_count, int depth) {
  TreeShape shape;
  shape.max_depth = depth;
  Tree tree;
  grow(rng, tree, feature_count, shape, 0, true);
  return tree;
}

TreeEnsemble random_ensemble(Rng& rng, int tree_count, int feature_count, const TreeShape& shape,
                             Comparator comparator) {
  std::vector<Tree> trees;
  trees.reserve(static_cast<std::size_t>(tree_count));
  for (int t = 0; t < tree_count; ++t) trees.push_back(random_tree(rng, feature_count, shape));
  const double base = rng.uniform(-1.0, 1.0);
  return TreeEnsemble(std::move(trees), base, feature_count, {}, comparator);
}

Eigen::VectorXd random_point(Rng& rng, int feature_count) {
  Eigen::VectorXd x(feature_count);
  for (int i = 0; i < feature_count; ++i) x[i] = rng.uniform();
  return x;
}

FeaturePartition random_partition(Rng& rng, int feature_count, int group_count) {
  std::vector<FeatureIndex> order(static_cast<std::size_t>(feature_count));
  std::iota(order.begin(), order.end(), 0);
  shuffle(rng, order);
  std::vector<FeatureGroup> groups(static_cast<std::size_t>(group_count));
  for (int g = 0; g < group_count; ++g) groups[static_cast<std::size_t>(g)].name = "g" + std::to_string(g);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto g = i < groups.size() ? i : static_cast<std::size_t>(rng.below(group_count));
    groups[g].features.push_back(order[i]);
  }
  for (auto& g : groups) std::sort(g.features.begin(), g.features.end());
  return FeaturePartition(std::move(groups), feature_count);
}

Dataset random_dataset(Rng& rng, int rows, const std::vector<std::string>& feature_names) {
  Dataset d;
  d.feature_names = feature_names;
  d.rows.resize(rows, static_cast<Eigen::Index>(feature_names.size()));
  for (Eigen::Index r = 0; r < d.rows.rows(); ++r) {
    for (Eigen::Index c = 0; c < d.rows.cols(); ++c) d.rows(r, c) = rng.uniform();
  }
  return d;
}

std::vector<std::string> soybean_feature_names(const SoybeanShape& shape) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(shape.feature_count()));
  for (int b = 0; b < shape.bands; ++b) {
    for (int i = 0; i < shape.features_per_band; ++i) {
      names.push_back(numbered("band", b + 1, 2) + "_" + numbered("v", i, 3));
    }
  }
  for (int i = 0; i < shape.handcrafted; ++i) names.push_back(numbered("handcrafted_", i, 2));
  return names;
}

FeaturePartition soybean_partition(const SoybeanShape& shape) {
  std::vector<FeatureGroup> groups;
  FeatureIndex next = 0;
  for (int b = 0; b < shape.bands; ++b) {
    FeatureGroup g{numbered("band", b + 1, 2), {}};
    for (int i = 0; i < shape.features_per_band; ++i) g.features.push_back(next++);
    groups.push_back(std::move(g));
  }
  FeatureGroup hand{"handcrafted", {}};
  for (int i = 0; i < shape.handcrafted; ++i) hand.features.push_back(next++);
  groups.push_back(std::move(hand));
  return FeaturePartition(std::move(groups), shape.feature_count());
}

std::vector<std::string> timestamp_feature_names(int timestamps, int features_per_timestamp) {
  std::vector<std::string> names;
  for (int t = 0; t < timestamps; ++t) {
    for (int i = 0; i < features_per_timestamp; ++i) {
      names.push_back(numbered("t", t + 1, 1) + "_" + numbered("f", i, 2));
    }
  }
  return names;
}

FeaturePartition timestamp_partition(int timestamps, int features_per_timestamp) {
  std::vector<FeatureGroup> groups;
  FeatureIndex next = 0;
  for (int t = 0; t < timestamps; ++t) {
    FeatureGroup g{numbered("t", t + 1, 1), {}};
    for (int i = 0; i < features_per_timestamp; ++i) g.features.push_back(next++);
    groups.push_back(std::move(g));
  }
  return FeaturePartition(std::move(groups), timestamps * features_per_timestamp);
}

}  // namespace gsv::synthetic
