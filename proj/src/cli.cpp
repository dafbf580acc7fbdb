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

#include "gsv/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gsv/aggregate.hpp"
#include "gsv/error.hpp"
#include "gsv/fast_gsv.hpp"
#include "gsv/game.hpp"
#include "gsv/oracle.hpp"
#include "gsv/partition.hpp"
#include "gsv/swarm_svg.hpp"
#include "gsv/tree.hpp"
#include "gsv/validate.hpp"

namespace gsv {
namespace {

// Raised for input problems; maps to kExitInputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string model_path;
  std::string model_format = "native";
  double base_value = 0.0;
  int feature_count = 0;
  std::string data_path;
  std::string groups_path;
  std::string rest_group;
  std::string row = "0";
  std::string engine = "fast";
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  int threads = 1;
  std::string out_path;
};

std::string read_file(const std::string& path, const std::string& what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + what + " file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw InputError("error while reading " + what + " file '" + path + "'");
  return ss.str();
}

// Writes via a sibling temporary and a rename, so a failed run never leaves a
// partial file behind.
void write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
    if (!out.flush()) throw InputError("cannot write '" + path + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot write '" + path + "'");
  }
}

std::vector<std::string> csv_header_features(const std::string& csv_text) {
  const auto records = parse_csv(csv_text);
  if (records.empty()) throw ParseError("CSV: no header row");
  std::vector<std::string> names;
  for (const auto& h : records.front()) {
    if (h != "row_id") names.push_back(h);
  }
  return names;
}

TreeEnsemble load_model(const RunConfig& cfg, const std::string* data_text) {
  if (cfg.model_path.empty()) throw InputError("--model is required");
  const std::string text = read_file(cfg.model_path, "model");
  if (cfg.model_format == "native") {
    return parse_native(text);
  }
  // XGBoost dumps carry neither feature names nor the feature count; take
  // them from --feature-count or the data header.
  std::vector<std::string> names;
  int count = cfg.feature_count;
  if (data_text != nullptr) {
    names = csv_header_features(*data_text);
    if (count == 0) count = static_cast<int>(names.size());
    if (count != static_cast<int>(names.size())) names.clear();
  }
  if (count <= 0) throw InputError("--feature-count or --data is required for --format xgboost");
  return import_xgboost_dump(text, cfg.base_value, count, std::move(names));
}

FeaturePartition load_partition(const RunConfig& cfg, const TreeEnsemble& model) {
  const auto names = model.resolved_feature_names();
  if (cfg.groups_path.empty()) return FeaturePartition::singletons(names);
  const std::string text = read_file(cfg.groups_path, "partition");
  PartitionOptions options;
  if (!cfg.rest_group.empty()) options.rest_group = cfg.rest_group;
  try {
    return parse_partition(text, model.feature_count(), names, options);
  } catch (const std::exception& e) {
    const std::string msg = e.what();
    throw InputError(msg.rfind("partition", 0) == 0 ? msg : "partition: " + msg);
  }
}

Engine parse_engine(const std::string& s) {
  if (s == "fast") return Engine::kFast;
  if (s == "oracle") return Engine::kOracle;
  throw InputError("--engine must be 'fast' or 'oracle'");
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << content;
  } else {
    write_file(cfg.out_path, content);
  }
}

struct Loaded {
  TreeEnsemble model;
  Dataset data;
  FeaturePartition partition;
};

Loaded load_all(const RunConfig& cfg) {
  if (cfg.data_path.empty()) throw InputError("--data is required");
  const std::string data_text = read_file(cfg.data_path, "data");
  TreeEnsemble model = load_model(cfg, &data_text);
  FeaturePartition partition = load_partition(cfg, model);
  Dataset data = read_dataset_csv(data_text, model.resolved_feature_names());
  if (data.size() == 0) throw InputError("data file has no rows");
  return {std::move(model), std::move(data), std::move(partition)};
}

Eigen::Index select_row(const Dataset& data, const std::string& selector) {
  for (Eigen::Index r = 0; r < data.size(); ++r) {
    if (!data.row_ids.empty() && data.row_ids[static_cast<std::size_t>(r)] == selector) return r;
  }
  long long index = -1;
  try {
    std::size_t used = 0;
    index = std::stoll(selector, &used);
    if (used != selector.size()) index = -1;
  } catch (const std::exception&) {
    index = -1;
  }
  if (index < 0 || index >= data.size()) {
    throw InputError("--row '" + selector + "' matches no row id and is not a row number below " +
                     std::to_string(data.size()));
  }
  return static_cast<Eigen::Index>(index);
}

int cmd_explain(const RunConfig& cfg, std::ostream& out) {
  const Loaded in = load_all(cfg);
  const Eigen::Index r = select_row(in.data, cfg.row);
  const Eigen::VectorXd x = in.data.rows.row(r).transpose();
  const Explanation e = parse_engine(cfg.engine) == Engine::kFast ? ensemble_gsv(in.model, x, in.partition)
                                                                  : brute_force_gsv(in.model, x, in.partition);
  emit(cfg, explanation_json(e), out);
  return kExitOk;
}

int cmd_explain_all(const RunConfig& cfg, std::ostream& out) {
  const Loaded in = load_all(cfg);
  const auto es = explain_dataset(in.model, in.data, in.partition, parse_engine(cfg.engine), cfg.threads);
  emit(cfg, explanations_json(es), out);
  return kExitOk;
}

int cmd_swarm(const RunConfig& cfg, std::ostream& out) {
  if (cfg.out_path.empty()) throw InputError("--out is required for swarm (writes <out>.svg and <out>.csv)");
  const Loaded in = load_all(cfg);
  const auto es = explain_dataset(in.model, in.data, in.partition, parse_engine(cfg.engine), cfg.threads);
  const Eigen::MatrixXd agg = aggregate_group_values(in.data, in.partition);
  const Eigen::MatrixXd colors = normalize_colors(agg);
  const auto points = swarm_points(es, colors, in.data);
  SwarmOptions options;
  options.seed = cfg.seed;
  const std::string svg = render_swarm_svg(points, in.partition.group_names(), options);
  const std::string csv = export_csv(points, in.partition, agg);
  write_file(cfg.out_path + ".svg", svg);
  write_file(cfg.out_path + ".csv", csv);
  out << "wrote " << cfg.out_path << ".svg and " << cfg.out_path << ".csv (" << in.data.size() << " rows, "
      << in.partition.group_count() << " groups)\n";
  return kExitOk;
}

int cmd_inspect(const RunConfig& cfg, std::ostream& out) {
  std::optional<std::string> data_text;
  if (!cfg.data_path.empty()) data_text = read_file(cfg.data_path, "data");
  const TreeEnsemble model = load_model(cfg, data_text ? &*data_text : nullptr);
  const TreeMetrics m = tree_metrics(model);
  std::ostringstream ss;
  ss << "trees (T):       " << m.tree_count << "\n"
     << "max leaves (L):  " << m.max_leaves << "\n"
     << "max depth (D):   " << m.max_depth << "\n"
     << "features:        " << model.feature_count() << "\n"
     << "comparator:      " << (model.comparator() == Comparator::kLessEqual ? "<=" : "<") << "\n"
     << "base value:      " << std::setprecision(17) << model.base_value() << "\n";
  if (!cfg.groups_path.empty()) {
    const FeaturePartition p = load_partition(cfg, model);
    ss << "groups (k):      " << p.group_count() << "\n";
    for (const auto& g : p.groups()) ss << "  " << g.name << ": " << g.features.size() << " features\n";
  }
  emit(cfg, ss.str(), out);
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg, ValidationConfig vc, std::optional<int> index, std::ostream& out,
                 std::ostream& err) {
  vc.seed = cfg.seed;
  vc.tolerance = cfg.tolerance;
  vc.only_index = index;
  if (vc.samples == 0 && !index) err << "warning: 0 samples requested, nothing was validated\n";
  const ValidationReport r = run_validation(vc);
  std::ostringstream ss;
  char buf[128];
  ss << "samples:                  " << r.samples << "\n";
  std::snprintf(buf, sizeof buf, "%.3e", r.max_deviation);
  ss << "max relative deviation:   " << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.3e", r.max_efficiency_residual);
  ss << "max efficiency residual:  " << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.3e", vc.tolerance);
  ss << "tolerance:                " << buf << "\n";
  ss << "result:                   " << (r.passed() ? "PASS" : "FAIL") << "\n";
  if (!r.passed()) ss << "first failure:            " << r.failure_detail << "\n";
  emit(cfg, ss.str(), out);
  if (!r.passed()) {
    err << "validation failed at index " << *r.first_failure << " (replay with --seed " << vc.seed
        << " --index " << *r.first_failure << ")\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

std::string fraction(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-8s (%.6f)", r.to_string().c_str(), static_cast<double>(r));
  return buf;
}

int cmd_glove_demo(int left_gloves, std::ostream& out) {
  const auto game = glove_game<Rational>(left_gloves);
  const int p = game.player_count();
  std::ostringstream ss;
  ss << "Glove game: players 1.." << left_gloves << " hold a left glove, player " << p
     << " holds the right glove.\n"
     << "A coalition is worth 1 if it can assemble a pair, else 0.\n\n";
  ss << "Classic Shapley values\n";
  for (int i = 0; i < p; ++i) ss << "  player " << i + 1 << ":  " << fraction(classic_shapley(game, i)) << "\n";

  const PlayerPartition partition(p, {(Coalition{1} << left_gloves) - 1, Coalition{1} << left_gloves});
  const auto grouped = grouped_shapley_values(game, partition);
  ss << "\nGrouped Shapley values (C1 = left gloves {1.." << left_gloves << "}, C2 = right glove {" << p
     << "})\n";
  for (int g = 0; g < 2; ++g) {
    const Rational naive = naive_group_sum(game, partition, g);
    ss << "  C" << g + 1 << ":  grouped " << fraction(grouped[static_cast<std::size_t>(g)]) << "  naive sum "
       << fraction(naive) << "  gap " << fraction(grouped[static_cast<std::size_t>(g)] - naive) << "\n";
  }
  ss << "\nGrouped values sum to v(P) - v({}) = 1; the naive sums split the same total differently.\n";
  out << ss.str();
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grouped Shapley value explanations for decision-tree ensembles", "gsv"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model_path, "Model file")->required();
    sub->add_option("--format", cfg.model_format, "Model format")
        ->check(CLI::IsMember({"native", "xgboost"}))
        ->capture_default_str();
    sub->add_option("--base-value", cfg.base_value, "Base value for XGBoost dumps")->capture_default_str();
    sub->add_option("--feature-count", cfg.feature_count, "Feature count for XGBoost dumps");
  };
  auto add_data = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--data", cfg.data_path, "CSV with a header of model feature names");
    if (required) opt->required();
    sub->add_option("--groups", cfg.groups_path, "Partition JSON (default: one group per feature)");
    sub->add_option("--rest-group", cfg.rest_group, "Collect unassigned features into this group");
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--engine", cfg.engine, "fast or oracle")
        ->check(CLI::IsMember({"fast", "oracle"}))
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads, "Row-level worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--tolerance", cfg.tolerance, "Relative tolerance")->capture_default_str();
    sub->add_option("--out", cfg.out_path, "Output path (default: stdout)");
  };

  auto* explain = app.add_subcommand("explain", "Explain one row");
  add_model(explain);
  add_data(explain, true);
  add_engine(explain);
  add_common(explain);
  explain->add_option("--row", cfg.row, "Row id or row number")->capture_default_str();

  auto* explain_all = app.add_subcommand("explain-all", "Explain every row (JSON array)");
  add_model(explain_all);
  add_data(explain_all, true);
  add_engine(explain_all);
  add_common(explain_all);

  auto* swarm = app.add_subcommand("swarm", "Swarm plot SVG and CSV for every row");
  add_model(swarm);
  add_data(swarm, true);
  add_engine(swarm);
  add_common(swarm);

  auto* inspect = app.add_subcommand("inspect", "Print model size metrics and the partition");
  add_model(inspect);
  add_data(inspect, false);
  add_common(inspect);

  ValidationConfig vc;
  std::optional<int> index;
  auto* validate = app.add_subcommand("validate", "Randomized fast-vs-oracle equivalence check");
  add_common(validate);
  validate->add_option("--samples", vc.samples, "Random instances")->capture_default_str();
  validate->add_option("--max-trees", vc.max_trees)->capture_default_str();
  validate->add_option("--max-depth", vc.max_depth)->capture_default_str();
  validate->add_option("--max-features", vc.max_features)->capture_default_str();
  validate->add_option("--max-groups", vc.max_groups)->capture_default_str();
  validate->add_flag("--singleton", vc.singleton_groups, "One group per feature (classic Shapley values)");
  validate->add_option("--index", index, "Replay a single instance");

  int left_gloves = 2;
  auto* glove = app.add_subcommand("glove-demo", "Classic vs grouped Shapley values on the glove game");
  glove->add_option("--left-gloves", left_gloves, "Number of left-glove players")
      ->check(CLI::Range(1, kMaxPlayers - 1))
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*explain) return cmd_explain(cfg, out);
    if (*explain_all) return cmd_explain_all(cfg, out);
    if (*swarm) return cmd_swarm(cfg, out);
    if (*inspect) return cmd_inspect(cfg, out);
    if (*validate) return cmd_validate(cfg, vc, index, out, err);
    if (*glove) return cmd_glove_demo(left_gloves, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace gsv
