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

#include "gsv/aggregate.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "gsv/error.hpp"
#include "gsv/fast_gsv.hpp"
#include "gsv/oracle.hpp"
#include "gsv/synthetic.hpp"

namespace gsv {
namespace {

TEST(AggregateTest, GroupMeans) {
  Dataset d;
  d.rows.resize(2, 3);
  d.rows << 1, 3, 10,
            2, 6, 20;
  d.feature_names = {"a", "b", "c"};
  const FeaturePartition p({{"ab", {0, 1}}, {"c", {2}}}, 3);
  const Eigen::MatrixXd m = aggregate_group_values(d, p);
  EXPECT_EQ(m(0, 0), 2.0);
  EXPECT_EQ(m(1, 0), 4.0);
  EXPECT_EQ(m(1, 1), 20.0);
}

TEST(AggregateTest, NormalizesColumns) {
  Eigen::MatrixXd m(3, 2);
  m << 1, 5,
       3, 5,
       2, 5;
  const Eigen::MatrixXd c = normalize_colors(m);
  EXPECT_EQ(c(0, 0), 0.0);
  EXPECT_EQ(c(1, 0), 1.0);
  EXPECT_EQ(c(2, 0), 0.5);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(c(i, 1), 0.5);  // constant column
  EXPECT_THROW(normalize_colors(Eigen::MatrixXd(0, 2)), ArgumentError);
}

TEST(AggregateTest, ExplainsEveryRowInOrderWithAnyThreadCount) {
  synthetic::Rng rng(79);
  const TreeEnsemble model = synthetic::random_ensemble(rng, 5, 8);
  const FeaturePartition p = synthetic::random_partition(rng, 8, 3);
  const Dataset d = synthetic::random_dataset(rng, 40, model.resolved_feature_names());
  const auto one = explain_dataset(model, d, p, Engine::kFast, 1);
  const auto four = explain_dataset(model, d, p, Engine::kFast, 4);
  const auto oracle = explain_dataset(model, d, p, Engine::kOracle, 3);
  ASSERT_EQ(one.size(), 40U);
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].gsv, four[i].gsv);
    EXPECT_EQ(one[i].gsv, ensemble_gsv(model, d.rows.row(static_cast<Eigen::Index>(i)).transpose(), p).gsv);
    EXPECT_LE((one[i].gsv - oracle[i].gsv).cwiseAbs().maxCoeff(), 1e-9 * std::max(1.0, std::abs(one[i].prediction)));
    EXPECT_LE(std::abs(one[i].efficiency_residual()), 1e-9 * std::abs(one[i].prediction) + 1e-12);
  }
}

TEST(AggregateTest, ExportsCsvRowMajor) {
  synthetic::Rng rng(83);
  const TreeEnsemble model = synthetic::random_ensemble(rng, 2, 4);
  const FeaturePartition p({{"left", {0, 1}}, {"right", {2, 3}}}, 4);
  const Dataset d = synthetic::random_dataset(rng, 3, model.resolved_feature_names());
  const auto explanations = explain_dataset(model, d, p);
  const Eigen::MatrixXd aggregates = aggregate_group_values(d, p);
  const auto points = swarm_points(explanations, normalize_colors(aggregates), d);
  ASSERT_EQ(points.size(), 6U);
  EXPECT_EQ(points[1].group, 1);
  EXPECT_EQ(points[2].row_id, d.row_id(1));

  const std::string csv = export_csv(points, p, aggregates);
  const auto records = parse_csv(csv);
  ASSERT_EQ(records.size(), 7U);
  EXPECT_EQ(records[0], (std::vector<std::string>{"row_id", "group", "gsv", "color_value", "raw_aggregate"}));
  // Values survive the text round trip and each row still sums to f(x) - base.
  for (std::size_t r = 0; r < 3; ++r) {
    double sum = 0.0;
    for (std::size_t g = 0; g < 2; ++g) {
      const auto& rec = records[1 + 2 * r + g];
      EXPECT_EQ(rec[1], g == 0 ? "left" : "right");
      EXPECT_EQ(std::stod(rec[2]), explanations[r].gsv[static_cast<Eigen::Index>(g)]);
      sum += std::stod(rec[2]);
    }
    EXPECT_NEAR(sum, explanations[r].prediction - explanations[r].base, 1e-9);
  }
}

TEST(AggregateTest, OracleEngineRefusesHugePartitions) {
  synthetic::Rng rng(89);
  const int d = kMaxOracleGroups + 2;
  const TreeEnsemble model = synthetic::random_ensemble(rng, 1, d);
  const Dataset data = synthetic::random_dataset(rng, 2, model.resolved_feature_names());
  EXPECT_THROW(explain_dataset(model, data, FeaturePartition::singletons(model.resolved_feature_names()),
                               Engine::kOracle),
               ArgumentError);
}

}  // namespace
}  // namespace gsv
