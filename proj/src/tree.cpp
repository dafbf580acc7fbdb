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

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gsv/error.hpp"
#include "json.hpp"

namespace gsv {
namespace {

using nlohmann::ordered_json;

std::string where(std::size_t tree, std::size_t node) {
  return "tree " + std::to_string(tree) + " node " + std::to_string(node);
}

double number_field(const ordered_json& obj, const char* key, const std::string& ctx) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(ctx + ": missing \"" + key + "\"");
  if (!it->is_number()) throw ParseError(ctx + ": \"" + key + "\" is not a number");
  return it->get<double>();
}

NodeIndex child_field(const ordered_json& obj, const char* key, const std::string& ctx) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return kNoChild;
  if (!it->is_number_integer()) throw ParseError(ctx + ": \"" + key + "\" must be an integer or null");
  const auto v = it->get<std::int64_t>();
  if (v < 0 || v > INT32_MAX) throw ValidationError(ctx + ": dangling child index " + std::to_string(v));
  return static_cast<NodeIndex>(v);
}

}  // namespace

TreeEnsemble::TreeEnsemble(std::vector<Tree> trees, double base_value, int feature_count,
                           std::vector<std::string> feature_names, Comparator comparator)
    : trees_(std::move(trees)),
      base_value_(base_value),
      feature_count_(feature_count),
      feature_names_(std::move(feature_names)),
      comparator_(comparator) {
  if (trees_.empty()) throw ValidationError("no trees");
  if (feature_count_ < 1) throw ValidationError("feature count must be positive");
  if (!std::isfinite(base_value_)) throw ValidationError("base value is not finite");
  if (!feature_names_.empty() && static_cast<int>(feature_names_.size()) != feature_count_) {
    throw ValidationError("feature_names has " + std::to_string(feature_names_.size()) +
                          " entries but the model has " + std::to_string(feature_count_) +
                          " features");
  }
  for (std::size_t t = 0; t < trees_.size(); ++t) validate_tree(trees_[t], feature_count_, t);
}

std::vector<std::string> TreeEnsemble::resolved_feature_names() const {
  if (!feature_names_.empty()) return feature_names_;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(feature_count_));
  for (int f = 0; f < feature_count_; ++f) names.push_back("f" + std::to_string(f));
  return names;
}

void TreeEnsemble::check_input(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (x.size() != feature_count_) {
    throw ArgumentError("dimension mismatch: expected " + std::to_string(feature_count_) +
                        " features, got " + std::to_string(x.size()));
  }
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) {
      throw ArgumentError("feature " + std::to_string(i) + " is missing or not finite");
    }
  }
}

void validate_tree(const Tree& tree, int feature_count, std::size_t tree_index) {
  const auto n = tree.nodes.size();
  if (n == 0) throw ValidationError("tree " + std::to_string(tree_index) + " has no nodes");
  std::vector<int> parents(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const TreeNode& node = tree.nodes[i];
    const std::string ctx = where(tree_index, i);
    if (!(node.cover > 0.0) || !std::isfinite(node.cover)) {
      throw ValidationError(ctx + ": cover must be positive and finite");
    }
    if ((node.left == kNoChild) != (node.right == kNoChild)) {
      throw ValidationError(ctx + ": internal nodes need both children, leaves neither");
    }
    if (node.is_leaf()) {
      if (!std::isfinite(node.value)) throw ValidationError(ctx + ": leaf value is not finite");
      continue;
    }
    for (const NodeIndex c : {node.left, node.right}) {
      if (c <= 0 || static_cast<std::size_t>(c) >= n) {
        throw ValidationError(ctx + ": dangling child index " + std::to_string(c));
      }
      ++parents[static_cast<std::size_t>(c)];
    }
    if (node.left == node.right) throw ValidationError(ctx + ": both children are the same node");
    if (node.feature < 0 || node.feature >= feature_count) {
      throw ValidationError(ctx + ": feature index " + std::to_string(node.feature) +
                            " overflows feature count " + std::to_string(feature_count));
    }
    if (!std::isfinite(node.threshold)) throw ValidationError(ctx + ": threshold is not finite");
    const double sum = tree.node(node.left).cover + tree.node(node.right).cover;
    if (std::abs(sum - node.cover) > kCoverTolerance * node.cover) {
      throw ValidationError(ctx + ": cover-consistency violation, children sum to " +
                            std::to_string(sum) + " but node cover is " +
                            std::to_string(node.cover));
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (parents[i] != 1) {
      throw ValidationError(where(tree_index, i) + (parents[i] == 0 ? ": unreachable node"
                                                                     : ": node has several parents"));
    }
  }
}

TreeEnsemble parse_native(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("malformed model JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("model JSON must be an object");

  double base_value = 0.0;
  if (auto it = doc.find("base_value"); it != doc.end()) {
    if (!it->is_number()) throw ParseError("\"base_value\" is not a number");
    base_value = it->get<double>();
  }

  std::vector<std::string> names;
  if (auto it = doc.find("feature_names"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw ParseError("\"feature_names\" must be an array");
    for (const auto& n : *it) {
      if (!n.is_string()) throw ParseError("feature names must be strings");
      names.push_back(n.get<std::string>());
    }
  }

  Comparator comparator = Comparator::kLessEqual;
  if (auto it = doc.find("comparator"); it != doc.end()) {
    const auto c = it->is_string() ? it->get<std::string>() : std::string();
    if (c == "<=") {
      comparator = Comparator::kLessEqual;
    } else if (c == "<") {
      comparator = Comparator::kLessThan;
    } else {
      throw ParseError("\"comparator\" must be \"<=\" or \"<\"");
    }
  }

  const auto trees_it = doc.find("trees");
  if (trees_it == doc.end() || !trees_it->is_array()) throw ParseError("missing \"trees\" array");

  std::vector<Tree> trees;
  FeatureIndex max_feature = -1;
  for (std::size_t t = 0; t < trees_it->size(); ++t) {
    const auto& jt = (*trees_it)[t];
    const auto nodes_it = jt.find("nodes");
    if (!jt.is_object() || nodes_it == jt.end() || !nodes_it->is_array()) {
      throw ParseError("tree " + std::to_string(t) + ": missing \"nodes\" array");
    }
    Tree tree;
    for (std::size_t i = 0; i < nodes_it->size(); ++i) {
      const auto& jn = (*nodes_it)[i];
      const std::string ctx = where(t, i);
      if (!jn.is_object()) throw ParseError(ctx + ": node must be an object");
      TreeNode node;
      node.left = child_field(jn, "left", ctx);
      node.right = child_field(jn, "right", ctx);
      node.cover = number_field(jn, "cover", ctx);
      if (node.left == kNoChild && node.right == kNoChild) {
        node.value = number_field(jn, "value", ctx);
      } else {
        const auto f = jn.find("feature");
        if (f == jn.end() || !f->is_number_integer()) {
          throw ParseError(ctx + ": internal node needs an integer \"feature\"");
        }
        const auto fv = f->get<std::int64_t>();
        if (fv < 0 || fv > INT32_MAX) {
          throw ValidationError(ctx + ": feature index " + std::to_string(fv) + " overflows");
        }
        node.feature = static_cast<FeatureIndex>(fv);
        node.threshold = number_field(jn, "threshold", ctx);
        if (auto d = jn.find("default_left"); d != jn.end() && d->is_boolean()) {
          node.default_left = d->get<bool>();
        }
        max_feature = std::max(max_feature, node.feature);
      }
      tree.nodes.push_back(node);
    }
    trees.push_back(std::move(tree));
  }

  int feature_count = names.empty() ? std::max(max_feature + 1, 1) : static_cast<int>(names.size());
  if (auto it = doc.find("feature_count"); it != doc.end()) {
    if (!it->is_number_integer()) throw ParseError("\"feature_count\" must be an integer");
    feature_count = it->get<int>();
  }
  return TreeEnsemble(std::move(trees), base_value, feature_count, std::move(names), comparator);
}

std::string to_native_json(const TreeEnsemble& ensemble) {
  ordered_json doc;
  doc["base_value"] = ensemble.base_value();
  doc["feature_count"] = ensemble.feature_count();
  doc["feature_names"] = ensemble.feature_names();
  doc["comparator"] = ensemble.comparator() == Comparator::kLessEqual ? "<=" : "<";
  auto& trees = doc["trees"] = ordered_json::array();
  for (const Tree& tree : ensemble.trees()) {
    ordered_json nodes = ordered_json::array();
    for (const TreeNode& n : tree.nodes) {
      ordered_json jn;
      if (n.is_leaf()) {
        jn["left"] = nullptr;
        jn["right"] = nullptr;
        jn["value"] = n.value;
      } else {
        jn["feature"] = n.feature;
        jn["threshold"] = n.threshold;
        jn["left"] = n.left;
        jn["right"] = n.right;
        jn["default_left"] = n.default_left;
      }
      jn["cover"] = n.cover;
      nodes.push_back(std::move(jn));
    }
    trees.push_back({{"nodes", std::move(nodes)}});
  }
  return doc.dump(2);
}

double predict_tree(const TreeEnsemble& ensemble, const Tree& tree,
                    const Eigen::Ref<const Eigen::VectorXd>& x) {
  const TreeNode* node = &tree.root();
  while (!node->is_leaf()) node = &tree.node(ensemble.next_node(*node, x));
  return node->value;
}

double predict(const TreeEnsemble& ensemble, const Eigen::Ref<const Eigen::VectorXd>& x) {
  ensemble.check_input(x);
  double sum = ensemble.base_value();
  for (const Tree& tree : ensemble.trees()) sum += predict_tree(ensemble, tree, x);
  return sum;
}

TreeMetrics tree_metrics(const TreeEnsemble& ensemble) {
  TreeMetrics m;
  m.tree_count = static_cast<int>(ensemble.trees().size());
  for (const Tree& tree : ensemble.trees()) {
    int leaves = 0;
    std::vector<std::pair<NodeIndex, int>> stack{{0, 0}};
    while (!stack.empty()) {
      const auto [i, depth] = stack.back();
      stack.pop_back();
      const TreeNode& node = tree.node(i);
      if (node.is_leaf()) {
        ++leaves;
        m.max_depth = std::max(m.max_depth, depth);
      } else {
        stack.emplace_back(node.left, depth + 1);
        stack.emplace_back(node.right, depth + 1);
      }
    }
    m.max_leaves = std::max(m.max_leaves, leaves);
  }
  return m;
}

}  // namespace gsv
