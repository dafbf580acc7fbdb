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

#include <gtest/gtest.h>

#include "gsv/synthetic.hpp"
#include "support/fixtures.hpp"
#include "support/reference.hpp"

namespace gsv {
namespace {

TEST(ConditionalExpectationTest, FixtureValues) {
  const TreeEnsemble model = parse_native(testing::kFixtureTree);
  const Eigen::Vector2d x(0.3, 0.8);
  EXPECT_NEAR(expected_value_ensemble(model, x, FeatureSet::none(2)), testing::kFixtureV_Empty, 1e-15);
  EXPECT_NEAR(expected_value_ensemble(model, x, FeatureSet::none(2).insert(0)), testing::kFixtureV_F0, 1e-15);
  EXPECT_NEAR(expected_value_ensemble(model, x, FeatureSet::none(2).insert(1)), testing::kFixtureV_F1, 1e-15);
  EXPECT_NEAR(expected_value_ensemble(model, x, FeatureSet::all(2)), testing::kFixtureV_All, 1e-15);
}

TEST(ConditionalExpectationTest, FullSetIsPredictionAndMatchesRecursion) {
  synthetic::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = rng.between(1, 8);
    const TreeEnsemble model = synthetic::random_ensemble(rng, rng.between(1, 4), d);
    const Eigen::VectorXd x = synthetic::random_point(rng, d);
    EXPECT_DOUBLE_EQ(expected_value_ensemble(model, x, FeatureSet::all(d)), predict(model, x));

    FeatureSet s(d);
    std::vector<bool> known(static_cast<std::size_t>(d), false);
    for (int f = 0; f < d; ++f) {
      if (rng.chance(0.5)) {
        s.insert(f);
        known[static_cast<std::size_t>(f)] = true;
      }
    }
    EXPECT_NEAR(expected_value_ensemble(model, x, s), testing::reference_value(model, x, known), 1e-12);
  }
}

TEST(ConditionalExpectationTest, BoundedByLeafValues) {
  synthetic::Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = rng.between(1, 8);
    const TreeEnsemble model = synthetic::random_ensemble(rng, 1, d);
    const Tree& tree = model.trees()[0];
    double lo = tree.nodes[0].value;
    double hi = lo;
    bool first = true;
    for (const TreeNode& n : tree.nodes) {
      if (!n.is_leaf()) continue;
      lo = first ? n.value : std::min(lo, n.value);
      hi = first ? n.value : std::max(hi, n.value);
      first = false;
    }
    const Eigen::VectorXd x = synthetic::random_point(rng, d);
    FeatureSet s(d);
    for (int f = 0; f < d; ++f) {
      if (rng.chance(0.3)) s.insert(f);
    }
    const double v = expected_value(model, tree, x, s);
    EXPECT_GE(v, lo - 1e-12);
    EXPECT_LE(v, hi + 1e-12);
  }
}

TEST(ConditionalExpectationTest, IgnoresFeaturesTheTreeNeverUses) {
  const TreeEnsemble model = parse_native(testing::kStump);
  const Eigen::Vector3d x(0.2, 7.0, -3.0);
  const double v = expected_value_ensemble(model, x, FeatureSet::none(3));
  EXPECT_DOUBLE_EQ(expected_value_ensemble(model, x, FeatureSet::none(3).insert(1).insert(2)), v);
  EXPECT_DOUBLE_EQ(v, (3 * 2.0 + 1 * 10.0) / 4.0);
}

TEST(ConditionalExpectationTest, FeatureSetBasics) {
  FeatureSet s = FeatureSet::none(4);
  EXPECT_EQ(s.size(), 0);
  s.insert(1).insert(3);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(3));
  s.erase(3);
  EXPECT_FALSE(s.contains(3));
  EXPECT_EQ(FeatureSet::all(4).size(), 4);
}

}  // namespace
}  // namespace gsv
