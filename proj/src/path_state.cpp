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

#include "gsv/path_state.hpp"

#include <string>

#include "gsv/error.hpp"

namespace gsv {
namespace path_kernel {

void extend(std::span<PathEntry> path, int length, double zero_fraction, double one_fraction,
            FeatureIndex feature) {
  const int l = length;
  path[static_cast<std::size_t>(l)] = {feature, zero_fraction, one_fraction, l == 0 ? 1.0 : 0.0};
  const double denom = l + 1;
  for (int i = l - 1; i >= 0; --i) {
    auto& here = path[static_cast<std::size_t>(i)];
    path[static_cast<std::size_t>(i) + 1].weight += one_fraction * here.weight * (i + 1) / denom;
    here.weight = zero_fraction * here.weight * (l - i) / denom;
  }
}

void unwind(std::span<PathEntry> path, int length, int index) {
  const int last = length - 1;
  const double one = path[static_cast<std::size_t>(index)].one_fraction;
  const double zero = path[static_cast<std::size_t>(index)].zero_fraction;
  const double denom = last + 1;
  double next = path[static_cast<std::size_t>(last)].weight;
  for (int i = last - 1; i >= 0; --i) {
    auto& here = path[static_cast<std::size_t>(i)];
    if (one != 0.0) {
      const double previous = here.weight;
      here.weight = next * denom / ((i + 1) * one);
      next = previous - here.weight * zero * (last - i) / denom;
    } else {
      here.weight = here.weight * denom / (zero * (last - i));
    }
  }
  for (int i = index; i < last; ++i) {
    auto& dst = path[static_cast<std::size_t>(i)];
    const auto& src = path[static_cast<std::size_t>(i) + 1];
    dst.feature = src.feature;
    dst.zero_fraction = src.zero_fraction;
    dst.one_fraction = src.one_fraction;
  }
}

double unwound_sum(std::span<const PathEntry> path, int length, int index) {
  const int last = length - 1;
  const double one = path[static_cast<std::size_t>(index)].one_fraction;
  const double zero = path[static_cast<std::size_t>(index)].zero_fraction;
  const double denom = last + 1;
  double next = path[static_cast<std::size_t>(last)].weight;
  double total = 0.0;
  for (int i = last - 1; i >= 0; --i) {
    if (one != 0.0) {
      const double w = next * denom / ((i + 1) * one);
      total += w;
      next = path[static_cast<std::size_t>(i)].weight - w * zero * (last - i) / denom;
    } else {
      total += path[static_cast<std::size_t>(i)].weight * denom / (zero * (last - i));
    }
  }
  return total;
}

}  // namespace path_kernel

namespace {

void check_index(const PathState& state, int index) {
  if (index < 0 || index >= state.size()) {
    throw ArgumentError("path entry " + std::to_string(index) + " out of range for a path of " +
                        std::to_string(state.size()));
  }
}

}  // namespace

double PathState::total_weight() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.weight;
  return s;
}

PathState weight_update(const PathState& state, double zero_fraction, double one_fraction,
                        FeatureIndex feature) {
  if (!(zero_fraction >= 0.0) || !(one_fraction >= 0.0) ||
      (zero_fraction == 0.0 && one_fraction == 0.0)) {
    throw ArgumentError("weight_update: fractions must be non-negative and not both zero");
  }
  PathState out = state;
  out.entries.emplace_back();
  path_kernel::extend(out.entries, state.size(), zero_fraction, one_fraction, feature);
  return out;
}

PathState unwind(const PathState& state, int index) {
  check_index(state, index);
  PathState out = state;
  path_kernel::unwind(out.entries, out.size(), index);
  out.entries.pop_back();
  return out;
}

double unwound_weight_sum(const PathState& state, int index) {
  check_index(state, index);
  return path_kernel::unwound_sum(state.entries, state.size(), index);
}

}  // namespace gsv
