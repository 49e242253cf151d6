// Copyright 2026 The rejmetrics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rejmetrics/cli/svg.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>

namespace rejmetrics::cli {
namespace {

constexpr double kPanelWidth = 300;
constexpr double kPanelHeight = 240;
constexpr double kMargin = 40;
constexpr std::array<const char*, 6> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

struct Panel {
  const char* title;
  double y_max;
  std::function<std::optional<double>(const OperatingPoint&)> value;
};

double PhiAxisMax(const std::vector<CurveSeries>& series) {
  double top = 1.0;
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      const double phi = p.point.rejection_quality;
      // Skip the noisy extremes of the sweep when choosing the scale.
      if (std::isfinite(phi) && p.point.rejected >= 0.01 &&
          p.point.rejected <= 0.99) {
        top = std::max(top, phi);
      }
    }
  }
  return std::ceil(top);
}

}  // namespace

std::string RenderCurveSvg(const std::vector<CurveSeries>& series) {
  const std::array<Panel, 3> panels = {{
      {"nonrejected accuracy A", 1.0,
       [](const OperatingPoint& p) { return p.accuracy; }},
      {"classification quality Q", 1.0,
       [](const OperatingPoint& p) { return std::optional<double>(p.quality); }},
      {"rejection quality phi", PhiAxisMax(series),
       [](const OperatingPoint& p) {
         return std::optional<double>(p.rejection_quality);
       }},
  }};

  const double width = panels.size() * (kPanelWidth + 2 * kMargin);
  const double height = kPanelHeight + 2 * kMargin + 20 * series.size();
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    Num(width) + "\" height=\"" + Num(height) +
                    "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t k = 0; k < panels.size(); ++k) {
    const Panel& panel = panels[k];
    const double x0 = k * (kPanelWidth + 2 * kMargin) + kMargin;
    const double y0 = kMargin;
    auto sx = [&](double r) { return x0 + r * kPanelWidth; };
    auto sy = [&](double v) {
      return y0 + kPanelHeight * (1.0 - std::clamp(v / panel.y_max, 0.0, 1.0));
    };
    svg += "<rect x=\"" + Num(x0) + "\" y=\"" + Num(y0) + "\" width=\"" +
           Num(kPanelWidth) + "\" height=\"" + Num(kPanelHeight) +
           "\" fill=\"none\" stroke=\"#444\"/>\n";
    svg += "<text x=\"" + Num(x0 + kPanelWidth / 2) + "\" y=\"" + Num(y0 - 10) +
           "\" text-anchor=\"middle\">" + panel.title + "</text>\n";
    for (int t = 0; t <= 4; ++t) {
      const double frac = t / 4.0;
      svg += "<text x=\"" + Num(sx(frac)) + "\" y=\"" +
             Num(y0 + kPanelHeight + 14) + "\" text-anchor=\"middle\">" +
             Label(frac) + "</text>\n";
      svg += "<text x=\"" + Num(x0 - 4) + "\" y=\"" +
             Num(sy(frac * panel.y_max) + 4) + "\" text-anchor=\"end\">" +
             Label(frac * panel.y_max) + "</text>\n";
    }
    svg += "<text x=\"" + Num(x0 + kPanelWidth / 2) + "\" y=\"" +
           Num(y0 + kPanelHeight + 28) + "\" text-anchor=\"middle\">r</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
      std::string path;
      for (const auto& p : series[s].points) {
        const auto v = panel.value(p.point);
        if (!v) continue;
        path += path.empty() ? "M" : " L";
        path += Num(sx(p.point.rejected)) + "," + Num(sy(*v));
      }
      svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" +
             kPalette[s % kPalette.size()] + "\" stroke-width=\"1.5\"/>\n";
    }
  }

  for (std::size_t s = 0; s < series.size(); ++s) {
    const double y = kPanelHeight + 2 * kMargin + 20 * s + 4;
    svg += "<line x1=\"" + Num(kMargin) + "\" y1=\"" + Num(y) + "\" x2=\"" +
           Num(kMargin + 20) + "\" y2=\"" + Num(y) + "\" stroke=\"" +
           kPalette[s % kPalette.size()] + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + Num(kMargin + 26) + "\" y=\"" + Num(y + 4) + "\">" +
           series[s].name + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace rejmetrics::cli
