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

#include <algorithm>
#include <cstdio>
#include <exception>
#include <thread>

#include "gsv/error.hpp"
#include "gsv/fast_gsv.hpp"
#include "gsv/oracle.hpp"

namespace gsv {

std::vector<Explanation> explain_dataset(const TreeEnsemble& ensemble, const Dataset& dataset,
                                         const FeaturePartition& partition, Engine engine,
                                         int threads) {
  if (dataset.rows.cols() != ensemble.feature_count()) {
    throw ArgumentError("dimension mismatch: dataset has " + std::to_string(dataset.rows.cols()) +
                        " columns, model has " + std::to_string(ensemble.feature_count()) + " features");
  }
  if (engine == Engine::kOracle && partition.group_count() > kMaxOracleGroups) {
    throw ArgumentError("oracle engine supports at most " + std::to_string(kMaxOracleGroups) +
                        " groups, got " + std::to_string(partition.group_count()));
  }
  const auto n = static_cast<std::size_t>(dataset.size());
  std::vector<Explanation> out(n);
  auto explain_row = [&](std::size_t r) {
    const Eigen::VectorXd x = dataset.rows.row(static_cast<Eigen::Index>(r)).transpose();
    out[r] = engine == Engine::kFast ? ensemble_gsv(ensemble, x, partition)
                                     : brute_force_gsv(ensemble, x, partition);
  };

  const auto workers = static_cast<std::size_t>(std::clamp<long>(threads, 1, std::max<long>(1, static_cast<long>(n))));
  if (workers <= 1) {
    for (std::size_t r = 0; r < n; ++r) explain_row(r);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t r = w; r < n; r += workers) explain_row(r);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Eigen::MatrixXd aggregate_group_values(const Dataset& dataset, const FeaturePartition& partition) {
  if (dataset.rows.cols() != partition.feature_count()) {
    throw ArgumentError("dimension mismatch between dataset and partition");
  }
  Eigen::MatrixXd out(dataset.rows.rows(), partition.group_count());
  for (GroupIndex g = 0; g < partition.group_count(); ++g) {
    const auto& features = partition.group(g).features;
    out.col(g) = dataset.rows(Eigen::all, features).rowwise().mean();
  }
  return out;
}

Eigen::MatrixXd normalize_colors(const Eigen::Ref<const Eigen::MatrixXd>& aggregates) {
  if (aggregates.rows() == 0) throw ArgumentError("normalize_colors: empty dataset");
  Eigen::MatrixXd out(aggregates.rows(), aggregates.cols());
  for (Eigen::Index c = 0; c < aggregates.cols(); ++c) {
    const double lo = aggregates.col(c).minCoeff();
    const double hi = aggregates.col(c).maxCoeff();
    if (hi > lo) {
      out.col(c) = ((aggregates.col(c).array() - lo) / (hi - lo)).cwiseMax(0.0).cwiseMin(1.0).matrix();
    } else {
      out.col(c).setConstant(0.5);
    }
  }
  return out;
}

std::vector<SwarmPoint> swarm_points(const std::vector<Explanation>& explanations,
                                     const Eigen::Ref<const Eigen::MatrixXd>& colors,
                                     const Dataset& dataset) {
  if (static_cast<Eigen::Index>(explanations.size()) != colors.rows()) {
    throw ArgumentError("swarm_points: explanation and color row counts differ");
  }
  std::vector<SwarmPoint> points;
  for (std::size_t r = 0; r < explanations.size(); ++r) {
    const auto& e = explanations[r];
    if (e.gsv.size() != colors.cols()) throw ArgumentError("swarm_points: group counts differ");
    for (Eigen::Index g = 0; g < e.gsv.size(); ++g) {
      points.push_back({static_cast<GroupIndex>(g), e.gsv[g],
                        colors(static_cast<Eigen::Index>(r), g),
                        dataset.row_id(static_cast<Eigen::Index>(r))});
    }
  }
  return points;
}

std::string export_csv(const std::vector<SwarmPoint>& points, const FeaturePartition& partition,
                       const Eigen::Ref<const Eigen::MatrixXd>& aggregates) {
  std::string out = "row_id,group,gsv,color_value,raw_aggregate\n";
  const auto groups = static_cast<std::size_t>(partition.group_count());
  char buf[96];
  for (std::size_t i = 0; i < points.size(); ++i) {
    const SwarmPoint& p = points[i];
    const auto row = static_cast<Eigen::Index>(i / groups);
    out += csv_field(p.row_id);
    out += ",";
    out += csv_field(partition.group(p.group).name);
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g\n", p.gsv, p.color_value, aggregates(row, p.group));
    out += buf;
  }
  return out;
}

}  // namespace gsv
