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

#include "gsv/conditional_expectation.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "gsv/error.hpp"

namespace gsv {

int FeatureSet::size() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

double expected_value(const TreeEnsemble& ensemble, const Tree& tree,
                      const Eigen::Ref<const Eigen::VectorXd>& x, const FeatureSet& s) {
  if (x.size() != ensemble.feature_count() || s.feature_count() != ensemble.feature_count()) {
    throw ArgumentError("dimension mismatch: model has " + std::to_string(ensemble.feature_count()) +
                        " features");
  }
  // (node, probability of reaching it)
  std::vector<std::pair<NodeIndex, double>> stack{{0, 1.0}};
  double total = 0.0;
  while (!stack.empty()) {
    const auto [i, weight] = stack.back();
    stack.pop_back();
    const TreeNode& node = tree.node(i);
    if (node.is_leaf()) {
      total += weight * node.value;
    } else if (s.contains(node.feature)) {
      stack.emplace_back(ensemble.next_node(node, x), weight);
    } else {
      stack.emplace_back(node.right, weight * tree.node(node.right).cover / node.cover);
      stack.emplace_back(node.left, weight * tree.node(node.left).cover / node.cover);
    }
  }
  return total;
}

double expected_value_ensemble(const TreeEnsemble& ensemble,
                               const Eigen::Ref<const Eigen::VectorXd>& x, const FeatureSet& s) {
  ensemble.check_input(x);
  double sum = ensemble.base_value();
  for (const Tree& tree : ensemble.trees()) sum += expected_value(ensemble, tree, x, s);
  return sum;
}

}  // namespace gsv
