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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsv/tree.hpp"

namespace gsv {

using GroupIndex = std::int32_t;

struct FeatureGroup {
  std::string name;
  std::vector<FeatureIndex> features;
};

/// Exact partition of the model features into named groups. Group order is
/// the order of the source file and fixes the output order of every report.
class FeaturePartition {
 public:
  /// Validates the partition; throws ValidationError on overlap, a missing
  /// feature, an empty group or a duplicate name.
  FeaturePartition(std::vector<FeatureGroup> groups, int feature_count);

  /// One group per feature, named after the feature.
  static FeaturePartition singletons(const std::vector<std::string>& feature_names);

  int group_count() const { return static_cast<int>(groups_.size()); }
  int feature_count() const { return static_cast<int>(lookup_.size()); }
  const std::vector<FeatureGroup>& groups() const { return groups_; }
  const FeatureGroup& group(GroupIndex g) const { return groups_.at(static_cast<std::size_t>(g)); }
  std::vector<std::string> group_names() const;

  /// Owning group of a feature. Unchecked; see group_of() for the checked form.
  GroupIndex operator[](FeatureIndex f) const { return lookup_[static_cast<std::size_t>(f)]; }
  const std::vector<GroupIndex>& lookup() const { return lookup_; }

 private:
  std::vector<FeatureGroup> groups_;
  std::vector<GroupIndex> lookup_;
};

/// Throws ArgumentError when the feature is out of range.
GroupIndex group_of(const FeaturePartition& partition, FeatureIndex feature);

struct PartitionOptions {
  /// When set, unassigned features are collected into a trailing group of this name.
  std::optional<std::string> rest_group;
};

/// Accepts { "groups": [ { "name": ..., "features": [int|string ...] } ... ] }
/// or the shorthand { "name": [int|string ...], ... }. Names resolve against
/// feature_names.
FeaturePartition parse_partition(std::string_view json_text, int feature_count,
                                 const std::vector<std::string>& feature_names = {},
                                 const PartitionOptions& options = {});

std::string to_partition_json(const FeaturePartition& partition);

}  // namespace gsv
