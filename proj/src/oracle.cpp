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

#include "gsv/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gsv/conditional_expectation.hpp"
#include "gsv/error.hpp"

namespace gsv {

double subset_weight(int group_count, int subset_size) {
  if (group_count < 1 || subset_size < 0 || subset_size >= group_count) {
    throw ArgumentError("subset_weight: need 0 <= size < group count");
  }
  // 1 / (k * C(k-1, s)); the binomial is exact in double for k <= 50.
  const int n = group_count - 1;
  double binom = 1.0;
  for (int i = 1; i <= subset_size; ++i) binom = binom * (n - subset_size + i) / i;
  return 1.0 / (group_count * binom);
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (const double v : values) s += v;
    return s;
  }
  const auto half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

Explanation brute_force_gsv(const TreeEnsemble& ensemble, const Eigen::Ref<const Eigen::VectorXd>& x,
                            const FeaturePartition& partition) {
  ensemble.check_input(x);
  if (partition.feature_count() != ensemble.feature_count()) {
    throw ArgumentError("partition covers " + std::to_string(partition.feature_count()) +
                        " features but the model has " + std::to_string(ensemble.feature_count()));
  }
  const int k = partition.group_count();
  if (k > kMaxOracleGroups) {
    throw ArgumentError("oracle engine supports at most " + std::to_string(kMaxOracleGroups) +
                        " groups, got " + std::to_string(k));
  }

  const std::uint32_t subsets = std::uint32_t{1} << k;
  std::vector<double> worth(subsets);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    FeatureSet known(ensemble.feature_count());
    for (int g = 0; g < k; ++g) {
      if ((mask >> g) & 1U) {
        for (const FeatureIndex f : partition.group(g).features) known.insert(f);
      }
    }
    worth[mask] = expected_value_ensemble(ensemble, x, known);
  }

  std::vector<double> weights(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) weights[static_cast<std::size_t>(s)] = subset_weight(k, s);

  Explanation out;
  out.base = worth[0];
  out.prediction = predict(ensemble, x);
  out.groups = partition.group_names();
  out.gsv.resize(k);
  std::vector<double> terms;
  terms.reserve(subsets / 2);
  for (int g = 0; g < k; ++g) {
    const std::uint32_t bit = std::uint32_t{1} << g;
    terms.clear();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      if ((mask & bit) != 0) continue;
      terms.push_back(weights[static_cast<std::size_t>(std::popcount(mask))] *
                      (worth[mask | bit] - worth[mask]));
    }
    out.gsv[g] = pairwise_sum(terms);
  }
  return out;
}

Explanation brute_force_classic(const TreeEnsemble& ensemble,
                                const Eigen::Ref<const Eigen::VectorXd>& x) {
  return brute_force_gsv(ensemble, x, FeaturePartition::singletons(ensemble.resolved_feature_names()));
}

}  // namespace gsv
