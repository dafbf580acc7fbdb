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

#include <charconv>
#include <set>
#include <string>
#include <utility>

#include "gsv/error.hpp"
#include "gsv/tree.hpp"
#include "json.hpp"

namespace gsv {
namespace {

using nlohmann::json;

const std::set<std::string>& known_fields() {
  static const std::set<std::string> fields = {"nodeid", "depth",     "split", "split_condition",
                                               "yes",    "no",        "missing", "gain",
                                               "cover",  "children", "leaf"};
  return fields;
}

class DumpConverter {
 public:
  DumpConverter(int feature_count, const std::vector<std::string>& names)
      : feature_count_(feature_count), names_(names) {}

  Tree convert(const json& root, std::size_t tree_index) {
    tree_index_ = tree_index;
    Tree tree;
    append(root, tree);
    return tree;
  }

 private:
  std::string ctx(const json& node) const {
    std::string id = node.contains("nodeid") ? node["nodeid"].dump() : "?";
    return "tree " + std::to_string(tree_index_) + " nodeid " + id;
  }

  FeatureIndex resolve_feature(const json& split, const json& node) const {
    long long index = -1;
    if (split.is_number_integer()) {
      index = split.get<long long>();
    } else if (split.is_string()) {
      const auto s = split.get<std::string>();
      bool found = false;
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == s) {
          index = static_cast<long long>(i);
          found = true;
          break;
        }
      }
      if (!found) {
        const char* begin = s.data() + 1;
        const char* end = s.data() + s.size();
        const auto [ptr, ec] = std::from_chars(begin, end, index);
        if (s.size() < 2 || s[0] != 'f' || ec != std::errc() || ptr != end) {
          throw ValidationError(ctx(node) + ": unknown feature \"" + s + "\"");
        }
      }
    } else {
      throw ParseError(ctx(node) + ": \"split\" must be a feature name or index");
    }
    if (index < 0 || index >= feature_count_) {
      throw ValidationError(ctx(node) + ": feature index " + std::to_string(index) +
                            " overflows feature count " + std::to_string(feature_count_));
    }
    return static_cast<FeatureIndex>(index);
  }

  static double number(const json& node, const char* key, const std::string& where) {
    const auto it = node.find(key);
    if (it == node.end()) throw ParseError(where + ": missing \"" + key + "\"");
    if (!it->is_number()) throw ParseError(where + ": non-numeric \"" + key + "\"");
    return it->get<double>();
  }

  NodeIndex append(const json& node, Tree& tree) {
    if (!node.is_object()) throw ParseError("tree " + std::to_string(tree_index_) + ": node is not an object");
    for (const auto& [key, value] : node.items()) {
      if (!known_fields().contains(key)) {
        throw ParseError(ctx(node) + ": unsupported node field \"" + key + "\"");
      }
    }
    const auto self = static_cast<NodeIndex>(tree.nodes.size());
    tree.nodes.emplace_back();
    TreeNode out;
    if (!node.contains("cover")) {
      throw ParseError(ctx(node) + ": missing \"cover\" (dump the model with stats)");
    }
    out.cover = number(node, "cover", ctx(node));

    if (node.contains("leaf")) {
      out.value = number(node, "leaf", ctx(node));
      tree.nodes[static_cast<std::size_t>(self)] = out;
      return self;
    }

    const auto split = node.find("split");
    if (split == node.end()) throw ParseError(ctx(node) + ": node has neither \"leaf\" nor \"split\"");
    out.feature = resolve_feature(*split, node);
    const auto cond = node.find("split_condition");
    if (cond == node.end() || !cond->is_number()) {
      throw ParseError(ctx(node) + ": non-numeric threshold");
    }
    out.threshold = cond->get<double>();

    const auto yes = node.find("yes");
    const auto no = node.find("no");
    const auto children = node.find("children");
    if (yes == node.end() || no == node.end() || children == node.end() || !children->is_array()) {
      throw ParseError(ctx(node) + ": split node needs \"yes\", \"no\" and \"children\"");
    }
    const json* yes_child = nullptr;
    const json* no_child = nullptr;
    for (const auto& c : *children) {
      if (!c.is_object() || !c.contains("nodeid")) throw ParseError(ctx(node) + ": child without nodeid");
      if (c["nodeid"] == *yes) yes_child = &c;
      if (c["nodeid"] == *no) no_child = &c;
    }
    if (yes_child == nullptr || no_child == nullptr || yes_child == no_child) {
      throw ParseError(ctx(node) + ": \"yes\"/\"no\" do not match the children");
    }
    if (auto missing = node.find("missing"); missing != node.end()) {
      out.default_left = (*missing == *yes);
    }
    out.left = append(*yes_child, tree);
    out.right = append(*no_child, tree);
    tree.nodes[static_cast<std::size_t>(self)] = out;
    return self;
  }

  int feature_count_;
  const std::vector<std::string>& names_;
  std::size_t tree_index_ = 0;
};

}  // namespace

TreeEnsemble import_xgboost_dump(std::string_view json_text, double base_value, int feature_count,
                                 std::vector<std::string> feature_names) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed XGBoost dump: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("XGBoost dump must be a JSON array of trees");
  if (doc.empty()) throw ValidationError("no trees");
  if (feature_count < 1) throw ArgumentError("feature count must be positive");

  DumpConverter converter(feature_count, feature_names);
  std::vector<Tree> trees;
  trees.reserve(doc.size());
  for (std::size_t t = 0; t < doc.size(); ++t) {
    // Some dump tools emit each tree as a JSON string.
    if (doc[t].is_string()) {
      json parsed;
      try {
        parsed = json::parse(doc[t].get<std::string>());
      } catch (const json::parse_error& e) {
        throw ParseError("tree " + std::to_string(t) + ": " + e.what());
      }
      trees.push_back(converter.convert(parsed, t));
    } else {
      trees.push_back(converter.convert(doc[t], t));
    }
  }
  return TreeEnsemble(std::move(trees), base_value, feature_count, std::move(feature_names),
                      Comparator::kLessThan);
}

}  // namespace gsv
