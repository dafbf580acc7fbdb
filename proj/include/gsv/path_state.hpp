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

// Bookkeeping for the polynomial-time tree algorithm. A path state holds one
// entry per unique feature group met on the current root-to-node path. The
// entry attributes (feature, zero_fraction, one_fraction) belong to the
// group; the weight at slot i is the permutation weight of coalitions of
// size i and is not tied to any one group.

#include <span>
#include <vector>

#include "gsv/tree.hpp"

namespace gsv {

/// Feature placeholder of the entry seeded at the root.
inline constexpr FeatureIndex kRootFeature = -1;

struct PathEntry {
  FeatureIndex feature = kRootFeature;  // representative feature of the group
  double zero_fraction = 1.0;           // cover share flowing here when the group is unknown
  double one_fraction = 1.0;            // 1 if x routes here when the group is known, else 0
  double weight = 0.0;

  friend bool operator==(const PathEntry&, const PathEntry&) = default;
};

struct PathState {
  std::vector<PathEntry> entries;

  int size() const { return static_cast<int>(entries.size()); }
  bool empty() const { return entries.empty(); }
  double total_weight() const;

  friend bool operator==(const PathState&, const PathState&) = default;
};

/// Returns a copy of state extended by one entry. Existing weight mass is
/// split between coalitions that exclude the new group (scaled by p_z) and
/// ones that include it (scaled by p_o).
PathState weight_update(const PathState& state, double zero_fraction, double one_fraction,
                        FeatureIndex feature);

/// Returns a copy of state with entry `index` removed and the weights
/// restored to what they were before that entry was added.
PathState unwind(const PathState& state, int index);

/// Sum of the weights of unwind(state, index), without building it.
double unwound_weight_sum(const PathState& state, int index);

namespace path_kernel {

// In-place forms used by the tree recursion. `path` holds `length` live
// entries; extend() writes slot `length`, so path.size() must exceed it.
void extend(std::span<PathEntry> path, int length, double zero_fraction, double one_fraction,
            FeatureIndex feature);
void unwind(std::span<PathEntry> path, int length, int index);
double unwound_sum(std::span<const PathEntry> path, int length, int index);

}  // namespace path_kernel

}  // namespace gsv
