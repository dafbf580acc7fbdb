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

#include "gsv/tree.hpp"

#include <string>

#include <gtest/gtest.h>

#include "gsv/error.hpp"
#include "gsv/synthetic.hpp"
#include "support/fixtures.hpp"

namespace gsv {
namespace {

std::string one_tree(const std::string& nodes, const std::string& extra = "") {
  return R"({"base_value": 0.5, )" + extra + R"("trees": [{"nodes": [)" + nodes + "]}]}";
}

TEST(TreeTest, ParsesFixtureAndPredicts) {
  const TreeEnsemble model = parse_native(testing::kFixtureTree);
  EXPECT_EQ(model.feature_count(), 2);
  EXPECT_EQ(model.trees().size(), 1U);
  EXPECT_EQ(model.trees()[0].nodes.size(), 5U);
  EXPECT_DOUBLE_EQ(predict(model, Eigen::Vector2d(0.3, 0.8)), 3.0);
  EXPECT_DOUBLE_EQ(predict(model, Eigen::Vector2d(0.3, 0.2)), 1.0);
  EXPECT_DOUBLE_EQ(predict(model, Eigen::Vector2d(0.9, 0.2)), 5.0);
}

TEST(TreeTest, StumpPredictsAndAddsBase) {
  const std::string text = one_tree(
      R"({"feature": 0, "threshold": 1.0, "left": 1, "right": 2, "cover": 2},
         {"left": null, "right": null, "value": -1.0, "cover": 1},
         {"left": null, "right": null, "value": 1.0, "cover": 1})");
  const TreeEnsemble model = parse_native(text);
  EXPECT_DOUBLE_EQ(predict(model, Eigen::VectorXd::Constant(1, 0.0)), -0.5);
  EXPECT_DOUBLE_EQ(predict(model, Eigen::VectorXd::Constant(1, 1.0)), -0.5);  // ties go left
  EXPECT_DOUBLE_EQ(predict(model, Eigen::VectorXd::Constant(1, 2.0)), 1.5);
}

TEST(TreeTest, StrictComparatorSendsTiesRight) {
  const std::string text = one_tree(
      R"({"feature": 0, "threshold": 1.0, "left": 1, "right": 2, "cover": 2},
         {"left": null, "right": null, "value": -1.0, "cover": 1},
         {"left": null, "right": null, "value": 1.0, "cover": 1})",
      R"("comparator": "<", )");
  const TreeEnsemble model = parse_native(text);
  EXPECT_EQ(model.comparator(), Comparator::kLessThan);
  EXPECT_DOUBLE_EQ(predict(model, Eigen::VectorXd::Constant(1, 1.0)), 1.5);
}

TEST(TreeTest, RejectsCoverMismatch) {
  const std::string text = one_tree(
      R"({"feature": 0, "threshold": 1.0, "left": 1, "right": 2, "cover": 10},
         {"left": null, "right": null, "value": -1.0, "cover": 3},
         {"left": null, "right": null, "value": 1.0, "cover": 3})");
  try {
    parse_native(text);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("cover-consistency"), std::string::npos);
  }
}

TEST(TreeTest, RejectsStructuralErrors) {
  // Dangling child.
  EXPECT_THROW(parse_native(one_tree(
                   R"({"feature": 0, "threshold": 1, "left": 1, "right": 5, "cover": 2},
                      {"left": null, "right": null, "value": 0, "cover": 1})")),
               ValidationError);
  // Node with one child.
  EXPECT_THROW(parse_native(one_tree(
                   R"({"feature": 0, "threshold": 1, "left": 1, "right": null, "cover": 1},
                      {"left": null, "right": null, "value": 0, "cover": 1})")),
               ValidationError);
  // Zero cover.
  EXPECT_THROW(parse_native(one_tree(R"({"left": null, "right": null, "value": 0, "cover": 0})")),
               ValidationError);
  // Unreachable node.
  EXPECT_THROW(parse_native(one_tree(R"({"left": null, "right": null, "value": 0, "cover": 1},
                                        {"left": null, "right": null, "value": 0, "cover": 1})")),
               ValidationError);
  // Cycle back to the root.
  EXPECT_THROW(parse_native(one_tree(
                   R"({"feature": 0, "threshold": 1, "left": 1, "right": 0, "cover": 2},
                      {"left": null, "right": null, "value": 0, "cover": 1})")),
               ValidationError);
  // Feature outside the declared count.
  EXPECT_THROW(parse_native(one_tree(
                   R"({"feature": 3, "threshold": 1, "left": 1, "right": 2, "cover": 2},
                      {"left": null, "right": null, "value": 0, "cover": 1},
                      {"left": null, "right": null, "value": 0, "cover": 1})",
                   R"("feature_count": 2, )")),
               ValidationError);
  EXPECT_THROW(parse_native(R"({"trees": []})"), ValidationError);
  EXPECT_THROW(parse_native("{not json"), ParseError);
  EXPECT_THROW(parse_native(R"({"base_value": 0})"), ParseError);
}

TEST(TreeTest, CheckInputRejectsBadVectors) {
  const TreeEnsemble model = parse_native(testing::kFixtureTree);
  EXPECT_THROW(model.check_input(Eigen::VectorXd::Zero(3)), ArgumentError);
  Eigen::VectorXd x(2);
  x << 0.0, std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(model.check_input(x), ArgumentError);
}

TEST(TreeTest, RoundTripsThroughNativeJson) {
  synthetic::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const TreeEnsemble model = synthetic::random_ensemble(rng, 3, 6);
    const TreeEnsemble back = parse_native(to_native_json(model));
    ASSERT_EQ(back.trees().size(), model.trees().size());
    EXPECT_EQ(back.feature_count(), model.feature_count());
    EXPECT_EQ(back.base_value(), model.base_value());
    for (int r = 0; r < 10; ++r) {
      const Eigen::VectorXd x = synthetic::random_point(rng, 6);
      EXPECT_EQ(predict(back, x), predict(model, x));
    }
  }
}

TEST(TreeTest, Metrics) {
  const std::string leaf = one_tree(R"({"left": null, "right": null, "value": 2, "cover": 1})");
  const TreeMetrics m0 = tree_metrics(parse_native(leaf));
  EXPECT_EQ(m0.tree_count, 1);
  EXPECT_EQ(m0.max_leaves, 1);
  EXPECT_EQ(m0.max_depth, 0);

  synthetic::Rng rng(3);
  std::vector<Tree> trees = {synthetic::full_tree(rng, 4, 2)};
  const TreeMetrics m1 = tree_metrics(TreeEnsemble(trees, 0.0, 4));
  EXPECT_EQ(m1.max_leaves, 4);
  EXPECT_EQ(m1.max_depth, 2);

  std::vector<Tree> five;
  for (int i = 0; i < 5; ++i) five.push_back(synthetic::random_tree(rng, 4, {.max_depth = 3}));
  const TreeMetrics m2 = tree_metrics(TreeEnsemble(five, 0.0, 4));
  EXPECT_EQ(m2.tree_count, 5);
  EXPECT_LE(m2.max_leaves, 8);
  EXPECT_LE(m2.max_depth, 3);
  EXPECT_GE(m2.max_depth, 1);
}

TEST(TreeTest, DefaultsFeatureNames) {
  const TreeEnsemble model = parse_native(one_tree(
      R"({"feature": 2, "threshold": 1, "left": 1, "right": 2, "cover": 2},
         {"left": null, "right": null, "value": 0, "cover": 1},
         {"left": null, "right": null, "value": 0, "cover": 1})"));
  EXPECT_EQ(model.feature_count(), 3);
  EXPECT_EQ(model.resolved_feature_names(), (std::vector<std::string>{"f0", "f1", "f2"}));
}

}  // namespace
}  // namespace gsv
