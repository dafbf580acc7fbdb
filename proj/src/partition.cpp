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

#include "gsv/partition.hpp"

#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "gsv/error.hpp"
#include "json.hpp"

namespace gsv {
namespace {

using nlohmann::ordered_json;

constexpr GroupIndex kUnassigned = -1;

}  // namespace

FeaturePartition::FeaturePartition(std::vector<FeatureGroup> groups, int feature_count)
    : groups_(std::move(groups)), lookup_(static_cast<std::size_t>(feature_count), kUnassigned) {
  if (feature_count < 1) throw ValidationError("partition: feature count must be positive");
  if (groups_.empty()) throw ValidationError("partition: no groups");
  std::set<std::string> names;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    const FeatureGroup& group = groups_[g];
    if (group.name.empty()) throw ValidationError("partition: group " + std::to_string(g) + " has no name");
    if (!names.insert(group.name).second) {
      throw ValidationError("partition: duplicate group name \"" + group.name + "\"");
    }
    if (group.features.empty()) {
      throw ValidationError("partition: group \"" + group.name + "\" is empty");
    }
    for (const FeatureIndex f : group.features) {
      if (f < 0 || f >= feature_count) {
        throw ValidationError("partition: group \"" + group.name + "\" references feature " +
                              std::to_string(f) + " outside [0, " + std::to_string(feature_count) + ")");
      }
      auto& slot = lookup_[static_cast<std::size_t>(f)];
      if (slot != kUnassigned) {
        throw ValidationError("partition: feature " + std::to_string(f) + " assigned to both \"" +
                              groups_[static_cast<std::size_t>(slot)].name + "\" and \"" + group.name +
                              "\"");
      }
      slot = static_cast<GroupIndex>(g);
    }
  }
  for (std::size_t f = 0; f < lookup_.size(); ++f) {
    if (lookup_[f] == kUnassigned) {
      throw ValidationError("partition: feature " + std::to_string(f) + " is unassigned");
    }
  }
}

FeaturePartition FeaturePartition::singletons(const std::vector<std::string>& feature_names) {
  std::vector<FeatureGroup> groups;
  groups.reserve(feature_names.size());
  for (std::size_t f = 0; f < feature_names.size(); ++f) {
    groups.push_back({feature_names[f], {static_cast<FeatureIndex>(f)}});
  }
  return FeaturePartition(std::move(groups), static_cast<int>(feature_names.size()));
}

std::vector<std::string> FeaturePartition::group_names() const {
  std::vector<std::string> names;
  names.reserve(groups_.size());
  for (const auto& g : groups_) names.push_back(g.name);
  return names;
}

GroupIndex group_of(const FeaturePartition& partition, FeatureIndex feature) {
  if (feature < 0 || feature >= partition.feature_count()) {
    throw ArgumentError("feature " + std::to_string(feature) + " out of range");
  }
  return partition[feature];
}

FeaturePartition parse_partition(std::string_view json_text, int feature_count,
                                 const std::vector<std::string>& feature_names,
                                 const PartitionOptions& options) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("malformed partition JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("partition JSON must be an object");

  std::unordered_map<std::string, FeatureIndex> by_name;
  for (std::size_t f = 0; f < feature_names.size(); ++f) {
    by_name.emplace(feature_names[f], static_cast<FeatureIndex>(f));
  }

  auto parse_features = [&](const ordered_json& list, const std::string& group) {
    if (!list.is_array()) throw ParseError("partition: features of \"" + group + "\" must be an array");
    std::vector<FeatureIndex> out;
    for (const auto& item : list) {
      if (item.is_number_integer()) {
        const auto v = item.get<long long>();
        if (v < 0 || v >= feature_count) {
          throw ValidationError("partition: group \"" + group + "\" references feature " +
                                std::to_string(v) + " outside [0, " + std::to_string(feature_count) + ")");
        }
        out.push_back(static_cast<FeatureIndex>(v));
      } else if (item.is_string()) {
        const auto it = by_name.find(item.get<std::string>());
        if (it == by_name.end()) {
          throw ValidationError("partition: unknown feature name \"" + item.get<std::string>() + "\"");
        }
        out.push_back(it->second);
      } else {
        throw ParseError("partition: features must be indices or names");
      }
    }
    return out;
  };

  std::vector<FeatureGroup> groups;
  if (auto it = doc.find("groups"); it != doc.end() && it->is_array()) {
    for (const auto& jg : *it) {
      if (!jg.is_object() || !jg.contains("name") || !jg["name"].is_string()) {
        throw ParseError("partition: every group needs a string \"name\"");
      }
      const auto name = jg["name"].get<std::string>();
      if (!jg.contains("features")) throw ParseError("partition: group \"" + name + "\" has no \"features\"");
      groups.push_back({name, parse_features(jg["features"], name)});
    }
  } else {
    for (const auto& [name, list] : doc.items()) groups.push_back({name, parse_features(list, name)});
  }

  if (options.rest_group) {
    std::vector<bool> seen(static_cast<std::size_t>(feature_count), false);
    for (const auto& g : groups) {
      for (const FeatureIndex f : g.features) seen[static_cast<std::size_t>(f)] = true;
    }
    FeatureGroup rest{*options.rest_group, {}};
    for (std::size_t f = 0; f < seen.size(); ++f) {
      if (!seen[f]) rest.features.push_back(static_cast<FeatureIndex>(f));
    }
    if (!rest.features.empty()) groups.push_back(std::move(rest));
  }
  return FeaturePartition(std::move(groups), feature_count);
}

std::string to_partition_json(const FeaturePartition& partition) {
  ordered_json doc;
  auto& groups = doc["groups"] = ordered_json::array();
  for (const auto& g : partition.groups()) groups.push_back({{"name", g.name}, {"features", g.features}});
  return doc.dump(2);
}

}  // namespace gsv
