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

#include <vector>

#include <Eigen/Core>

#include "gsv/tree.hpp"

namespace gsv {

/// Set of known features.
class FeatureSet {
 public:
  explicit FeatureSet(int feature_count) : bits_(static_cast<std::size_t>(feature_count), false) {}

  static FeatureSet none(int feature_count) { return FeatureSet(feature_count); }
  static FeatureSet all(int feature_count) {
    FeatureSet s(feature_count);
    s.bits_.assign(s.bits_.size(), true);
    return s;
  }

  int feature_count() const { return static_cast<int>(bits_.size()); }
  bool contains(FeatureIndex f) const { return bits_[static_cast<std::size_t>(f)]; }
  FeatureSet& insert(FeatureIndex f) {
    bits_.at(static_cast<std::size_t>(f)) = true;
    return *this;
  }
  FeatureSet& erase(FeatureIndex f) {
    bits_.at(static_cast<std::size_t>(f)) = false;
    return *this;
  }
  int size() const;

 private:
  std::vector<bool> bits_;
};

/// E[tree(x) | features in s known]. Known features route by x; at a split on
/// an unknown feature both children are averaged, weighted by their share of
/// the node cover. The comparator comes from the owning ensemble.
double expected_value(const TreeEnsemble& ensemble, const Tree& tree,
                      const Eigen::Ref<const Eigen::VectorXd>& x, const FeatureSet& s);

/// base_value + sum over trees of expected_value.
double expected_value_ensemble(const TreeEnsemble& ensemble,
                               const Eigen::Ref<const Eigen::VectorXd>& x, const FeatureSet& s);

}  // namespace gsv
