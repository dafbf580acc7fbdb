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

#include "gsv/fast_gsv.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "gsv/conditional_expectation.hpp"
#include "gsv/error.hpp"
#include "gsv/path_state.hpp"

namespace gsv {
namespace {

int depth_of(const Tree& tree) {
  int max_depth = 0;
  std::vector<std::pair<NodeIndex, int>> stack{{0, 0}};
  while (!stack.empty()) {
    const auto [i, d] = stack.back();
    stack.pop_back();
    const TreeNode& n = tree.node(i);
    if (n.is_leaf()) {
      max_depth = std::max(max_depth, d);
    } else {
      stack.emplace_back(n.left, d + 1);
      stack.emplace_back(n.right, d + 1);
    }
  }
  return max_depth;
}

// One recursion level owns the slice of `buffer_` that starts right after its
// parent's live entries, so a child never clobbers its ancestors.
class TreeExplainer {
 public:
  TreeExplainer(const TreeEnsemble& ensemble, const Tree& tree,
                const Eigen::Ref<const Eigen::VectorXd>& x, const FeaturePartition& partition,
                Eigen::VectorXd& phi)
      : ensemble_(ensemble), tree_(tree), x_(x), partition_(partition), phi_(phi) {
    const auto depth = static_cast<std::size_t>(depth_of(tree));
    buffer_.resize((depth + 2) * (depth + 3) / 2);
  }

  void run() { expand(0, 0, 0, 1.0, 1.0, kRootFeature); }

 private:
  void expand(NodeIndex j, std::size_t parent_offset, int parent_length, double zero_fraction,
              double one_fraction, FeatureIndex feature) {
    const std::size_t offset = parent_offset + static_cast<std::size_t>(parent_length);
    std::copy_n(buffer_.begin() + static_cast<std::ptrdiff_t>(parent_offset), parent_length,
                buffer_.begin() + static_cast<std::ptrdiff_t>(offset));
    const std::span<PathEntry> path(buffer_.data() + offset, buffer_.size() - offset);
    path_kernel::extend(path, parent_length, zero_fraction, one_fraction, feature);
    int length = parent_length + 1;

    const TreeNode& node = tree_.node(j);
    if (node.is_leaf()) {
      // Slot 0 is the root seed and carries no group.
      for (int i = 1; i < length; ++i) {
        const PathEntry& e = path[static_cast<std::size_t>(i)];
        const double w = path_kernel::unwound_sum(path, length, i);
        phi_[partition_[e.feature]] += w * (e.one_fraction - e.zero_fraction) * node.value;
      }
      return;
    }

    const NodeIndex hot = ensemble_.next_node(node, x_);
    const NodeIndex cold = hot == node.left ? node.right : node.left;

    // A group already on the path is taken off and re-entered below with the
    // fractions it had, so coalition sizes do not grow.
    double incoming_zero = 1.0;
    double incoming_one = 1.0;
    const GroupIndex group = partition_[node.feature];
    for (int i = 1; i < length; ++i) {
      if (partition_[path[static_cast<std::size_t>(i)].feature] == group) {
        incoming_zero = path[static_cast<std::size_t>(i)].zero_fraction;
        incoming_one = path[static_cast<std::size_t>(i)].one_fraction;
        path_kernel::unwind(path, length, i);
        --length;
        break;
      }
    }

    const double cover = node.cover;
    expand(hot, offset, length, incoming_zero * tree_.node(hot).cover / cover, incoming_one,
           node.feature);
    expand(cold, offset, length, incoming_zero * tree_.node(cold).cover / cover, 0.0, node.feature);
  }

  const TreeEnsemble& ensemble_;
  const Tree& tree_;
  const Eigen::Ref<const Eigen::VectorXd>& x_;
  const FeaturePartition& partition_;
  Eigen::VectorXd& phi_;
  std::vector<PathEntry> buffer_;
};

void check_inputs(const TreeEnsemble& ensemble, const Eigen::Ref<const Eigen::VectorXd>& x,
                  const FeaturePartition& partition) {
  ensemble.check_input(x);
  if (partition.feature_count() != ensemble.feature_count()) {
    throw ArgumentError("partition covers " + std::to_string(partition.feature_count()) +
                        " features but the model has " + std::to_string(ensemble.feature_count()));
  }
}

}  // namespace

Eigen::VectorXd tree_gsv(const TreeEnsemble& ensemble, const Tree& tree,
                         const Eigen::Ref<const Eigen::VectorXd>& x, const FeaturePartition& partition) {
  check_inputs(ensemble, x, partition);
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(partition.group_count());
  TreeExplainer(ensemble, tree, x, partition, phi).run();
  return phi;
}

Explanation ensemble_gsv(const TreeEnsemble& ensemble, const Eigen::Ref<const Eigen::VectorXd>& x,
                         const FeaturePartition& partition) {
  check_inputs(ensemble, x, partition);
  Explanation out;
  out.groups = partition.group_names();
  out.gsv = Eigen::VectorXd::Zero(partition.group_count());
  for (const Tree& tree : ensemble.trees()) {
    TreeExplainer(ensemble, tree, x, partition, out.gsv).run();
  }
  out.base = expected_value_ensemble(ensemble, x, FeatureSet::none(ensemble.feature_count()));
  out.prediction = predict(ensemble, x);
  return out;
}

}  // namespace gsv
