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

#include "gsv/swarm_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string_view>

#include "gsv/error.hpp"

namespace gsv {
namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform in [0, 1).
double jitter_unit(std::uint64_t seed, std::string_view row_id, GroupIndex group) {
  const std::uint64_t h = splitmix64(seed ^ fnv1a64(row_id) ^
                                     splitmix64(static_cast<std::uint64_t>(group) + 1));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string px(double v) {
  // Avoid "-0.00".
  const double r = std::round(v * 100.0) / 100.0;
  return fmt("%.2f", r == 0.0 ? 0.0 : r);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string color_hex(double color_value) {
  const double t = std::clamp(color_value, 0.0, 1.0);
  constexpr double kBlue[3] = {0x1f, 0x77, 0xd4};
  constexpr double kMid[3] = {0xdd, 0xdd, 0xdd};
  constexpr double kRed[3] = {0xd6, 0x27, 0x28};
  const double* from = t < 0.5 ? kBlue : kMid;
  const double* to = t < 0.5 ? kMid : kRed;
  const double u = t < 0.5 ? t * 2.0 : (t - 0.5) * 2.0;
  char buf[8];
  int rgb[3];
  for (int i = 0; i < 3; ++i) rgb[i] = static_cast<int>(std::lround(from[i] + (to[i] - from[i]) * u));
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

std::string render_swarm_svg(const std::vector<SwarmPoint>& points,
                             const std::vector<std::string>& group_names,
                             const SwarmOptions& options) {
  if (points.empty()) throw ArgumentError("render_swarm_svg: no points");
  if (group_names.empty()) throw ArgumentError("render_swarm_svg: no groups");
  const int groups = static_cast<int>(group_names.size());
  for (const auto& p : points) {
    if (p.group < 0 || p.group >= groups) throw ArgumentError("render_swarm_svg: point group out of range");
  }

  constexpr double kTop = 48.0;
  constexpr double kAxis = 64.0;
  constexpr double kRightMargin = 30.0;
  const double left = options.label_width;
  const double right = options.width - kRightMargin;
  const double center = 0.5 * (left + right);
  const double half = 0.5 * (right - left);
  const double plot_height = static_cast<double>(groups) * options.row_height;
  const double bottom = kTop + plot_height;
  const double height = bottom + kAxis;

  double max_abs = 0.0;
  for (const auto& p : points) max_abs = std::max(max_abs, std::abs(p.gsv));
  const double extent = max_abs > 0.0 ? max_abs * 1.05 : 1.0;
  auto x_of = [&](double gsv) { return center + gsv / extent * half; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(options.width) +
         "\" height=\"" + px(height) + "\" viewBox=\"0 0 " + std::to_string(options.width) + " " + px(height) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<defs><linearGradient id=\"hue\" x1=\"0\" x2=\"1\" y1=\"0\" y2=\"0\">"
         "<stop offset=\"0\" stop-color=\"" + color_hex(0.0) + "\"/>"
         "<stop offset=\"0.5\" stop-color=\"" + color_hex(0.5) + "\"/>"
         "<stop offset=\"1\" stop-color=\"" + color_hex(1.0) + "\"/></linearGradient></defs>\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(options.width) + "\" height=\"" + px(height) +
         "\" fill=\"#ffffff\"/>\n";
  svg += "<text x=\"" + px(center) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
         xml_escape(options.title) + "</text>\n";

  for (int g = 0; g < groups; ++g) {
    const double y = kTop + (g + 0.5) * options.row_height;
    svg += "<g class=\"swarm\" data-group=\"" + xml_escape(group_names[static_cast<std::size_t>(g)]) + "\">\n";
    svg += "<line x1=\"" + px(left) + "\" y1=\"" + px(y) + "\" x2=\"" + px(right) + "\" y2=\"" + px(y) +
           "\" stroke=\"#eeeeee\"/>\n";
    svg += "<text x=\"" + px(left - 8) + "\" y=\"" + px(y + 4) + "\" text-anchor=\"end\">" +
           xml_escape(group_names[static_cast<std::size_t>(g)]) + "</text>\n";
    for (const auto& p : points) {
      if (p.group != g) continue;
      const double dy = (jitter_unit(options.seed, p.row_id, p.group) - 0.5) * 0.7 * options.row_height;
      svg += "<circle cx=\"" + px(x_of(p.gsv)) + "\" cy=\"" + px(y + dy) + "\" r=\"" +
             px(options.point_radius) + "\" fill=\"" + color_hex(p.color_value) + "\" fill-opacity=\"0.85\"/>\n";
    }
    svg += "</g>\n";
  }

  svg += "<line class=\"zero-line\" x1=\"" + px(center) + "\" y1=\"" + px(kTop) + "\" x2=\"" + px(center) +
         "\" y2=\"" + px(bottom) + "\" stroke=\"#555555\" stroke-dasharray=\"3,3\"/>\n";
  svg += "<line x1=\"" + px(left) + "\" y1=\"" + px(bottom) + "\" x2=\"" + px(right) + "\" y2=\"" + px(bottom) +
         "\" stroke=\"#000000\"/>\n";
  for (int t = -2; t <= 2; ++t) {
    const double v = extent * t / 2.0;
    const double x = x_of(v);
    svg += "<line x1=\"" + px(x) + "\" y1=\"" + px(bottom) + "\" x2=\"" + px(x) + "\" y2=\"" + px(bottom + 5) +
           "\" stroke=\"#000000\"/>\n";
    svg += "<text x=\"" + px(x) + "\" y=\"" + px(bottom + 18) + "\" text-anchor=\"middle\">" +
           fmt("%.3g", t == 0 ? 0.0 : v) + "</text>\n";
  }
  svg += "<text x=\"" + px(center) + "\" y=\"" + px(bottom + 36) + "\" text-anchor=\"middle\">" +
         xml_escape(options.x_label) + "</text>\n";
  const double legend_x = right - 120;
  svg += "<rect x=\"" + px(legend_x) + "\" y=\"" + px(bottom + 44) + "\" width=\"120\" height=\"8\" fill=\"url(#hue)\"/>\n";
  svg += "<text x=\"" + px(legend_x - 4) + "\" y=\"" + px(bottom + 52) + "\" text-anchor=\"end\">low</text>\n";
  svg += "<text x=\"" + px(right + 4) + "\" y=\"" + px(bottom + 52) + "\">high</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace gsv
