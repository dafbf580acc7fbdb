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
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace gsv {

using FeatureIndex = std::int32_t;
using NodeIndex = std::int32_t;

inline constexpr NodeIndex kNoChild = -1;

/// How a split routes x: left iff x[f] <= t, or left iff x[f] < t.
enum class Comparator { kLessEqual, kLessThan };

struct TreeNode {
  double value = 0.0;  // leaf prediction; ignored on internal nodes
  NodeIndex left = kNoChild;
  NodeIndex right = kNoChild;
  double threshold = 0.0;
  double cover = 1.0;  // training weight reaching the node
  FeatureIndex feature = 0;
  bool default_left = true;  // missing-value branch, recorded only

  bool is_leaf() const { return left == kNoChild; }
};

/// Node array rooted at index 0.
struct Tree {
  std::vector<TreeNode> nodes;

  const TreeNode& root() const { return nodes.front(); }
  const TreeNode& node(NodeIndex i) const { return nodes[static_cast<std::size_t>(i)]; }
};

struct TreeMetrics {
  int tree_count = 0;
  int max_leaves = 0;
  int max_depth = 0;
};

/// Additive ensemble: prediction(x) = base_value + sum of the reached leaves.
/// Immutable once validated, so it can be shared across threads.
class TreeEnsemble {
 public:
  TreeEnsemble() = default;

  /// Throws ValidationError unless every tree is well formed.
  TreeEnsemble(std::vector<Tree> trees, double base_value, int feature_count,
               std::vector<std::string> feature_names = {},
               Comparator comparator = Comparator::kLessEqual);

  const std::vector<Tree>& trees() const { return trees_; }
  double base_value() const { return base_value_; }
  int feature_count() const { return feature_count_; }
  Comparator comparator() const { return comparator_; }
  const std::vector<std::string>& feature_names() const { return feature_names_; }

  /// Declared feature names, or f0..f{n-1} when the model carries none.
  std::vector<std::string> resolved_feature_names() const;

  /// True when x takes the left branch of an internal node.
  bool goes_left(const TreeNode& node, double x) const {
    return comparator_ == Comparator::kLessEqual ? x <= node.threshold : x < node.threshold;
  }

  /// Hot child: the one x selects at an internal node.
  NodeIndex next_node(const TreeNode& node, const Eigen::Ref<const Eigen::VectorXd>& x) const {
    return goes_left(node, x[node.feature]) ? node.left : node.right;
  }

  /// Throws ArgumentError on a dimension mismatch or a non-finite entry.
  void check_input(const Eigen::Ref<const Eigen::VectorXd>& x) const;

 private:
  std::vector<Tree> trees_;
  double base_value_ = 0.0;
  int feature_count_ = 0;
  std::vector<std::string> feature_names_;
  Comparator comparator_ = Comparator::kLessEqual;
};

// Relative tolerance on cover(left) + cover(right) == cover(parent).
inline constexpr double kCoverTolerance = 1e-6;

/// Structural checks for one tree against a feature count: child indices,
/// single parent per node, positive covers, cover consistency.
void validate_tree(const Tree& tree, int feature_count, std::size_t tree_index = 0);

/// Native JSON schema:
///   { "base_value": number, "feature_names": [string...],
///     "feature_count": int (optional), "comparator": "<=" | "<" (optional),
///     "trees": [ { "nodes": [ {"feature", "threshold", "left", "right",
///                              "value", "cover"} ... ] } ] }
TreeEnsemble parse_native(std::string_view json_text);
std::string to_native_json(const TreeEnsemble& ensemble);

/// XGBoost `dump_model(dump_format="json")` output. Split names are "f<N>"
/// or entries of feature_names. Comparator is set to less-than.
TreeEnsemble import_xgboost_dump(std::string_view json_text, double base_value, int feature_count,
                                 std::vector<std::string> feature_names = {});

double predict(const TreeEnsemble& ensemble, const Eigen::Ref<const Eigen::VectorXd>& x);

/// Leaf value x reaches in a single tree.
double predict_tree(const TreeEnsemble& ensemble, const Tree& tree,
                    const Eigen::Ref<const Eigen::VectorXd>& x);

TreeMetrics tree_metrics(const TreeEnsemble& ensemble);

}  // namespace gsv
