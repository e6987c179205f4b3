// Copyright 2026 The bribelab Authors
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

#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace bribelab::cli {
namespace {

constexpr double kWidth = 720.0;
constexpr double kPanelHeight = 260.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kGap = 70.0;

std::string fixed(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.1f", value);
  return buffer;
}

std::string tick_label(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4g", value);
  return buffer;
}

struct Panel {
  double top;
  double y_min;
  double y_max;
  std::string title;
  std::string colour;
};

void draw_panel(std::ostringstream& svg, const Panel& panel, const std::vector<SweepRow>& rows, double x_min, double x_max,
                const std::function<double(const SweepRow&)>& y_of) {
  const double plot_width = kWidth - kLeft - kRight;
  auto sx = [&](double x) { return kLeft + (x_max > x_min ? (x - x_min) / (x_max - x_min) : 0.5) * plot_width; };
  auto sy = [&](double y) {
    const double span = panel.y_max - panel.y_min;
    return panel.top + kPanelHeight - (span > 0 ? (y - panel.y_min) / span : 0.5) * kPanelHeight;
  };

  svg << "<rect x=\"" << kLeft << "\" y=\"" << panel.top << "\" width=\"" << plot_width << "\" height=\"" << kPanelHeight
      << "\" fill=\"none\" stroke=\"#444\"/>\n";
  svg << "<text x=\"" << kLeft << "\" y=\"" << fixed(panel.top - 10) << "\" font-size=\"14\">" << panel.title << "</text>\n";
  for (int i = 0; i <= 4; ++i) {
    const double y = panel.y_min + (panel.y_max - panel.y_min) * i / 4.0;
    svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fixed(sy(y)) << "\" x2=\"" << kLeft << "\" y2=\"" << fixed(sy(y))
        << "\" stroke=\"#444\"/>\n";
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << fixed(sy(y) + 4) << "\" font-size=\"11\" text-anchor=\"end\">" << tick_label(y)
        << "</text>\n";
    const double x = x_min + (x_max - x_min) * i / 4.0;
    svg << "<line x1=\"" << fixed(sx(x)) << "\" y1=\"" << panel.top + kPanelHeight << "\" x2=\"" << fixed(sx(x)) << "\" y2=\""
        << panel.top + kPanelHeight + 5 << "\" stroke=\"#444\"/>\n";
    svg << "<text x=\"" << fixed(sx(x)) << "\" y=\"" << panel.top + kPanelHeight + 18 << "\" font-size=\"11\" text-anchor=\"middle\">"
        << tick_label(x) << "</text>\n";
  }

  // One polyline per run of consecutive valid rows.
  std::string points;
  auto flush = [&] {
    if (!points.empty()) {
      svg << "<polyline fill=\"none\" stroke=\"" << panel.colour << "\" stroke-width=\"2\" points=\"" << points << "\"/>\n";
      points.clear();
    }
  };
  for (const SweepRow& row : rows) {
    if (!row.valid) {
      flush();
      continue;
    }
    if (!points.empty()) points += ' ';
    points += fixed(sx(row.value)) + "," + fixed(sy(y_of(row)));
  }
  flush();
}

}  // namespace

std::string render_sweep_svg(const std::vector<SweepRow>& rows) {
  double x_min = 0.0, x_max = 1.0, cost_max = 0.0;
  bool any = false;
  for (const SweepRow& row : rows) {
    if (!row.valid) continue;
    x_min = any ? std::min(x_min, row.value) : row.value;
    x_max = any ? std::max(x_max, row.value) : row.value;
    cost_max = std::max(cost_max, row.corruption_over_phi_gamma_R);
    any = true;
  }
  if (cost_max <= 0.0) cost_max = 1.0;
  const std::string vary = rows.empty() ? "parameter" : rows.front().vary;
  const double height = kTop + 2 * kPanelHeight + kGap + 50;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << height << "\" viewBox=\"0 0 " << kWidth
      << ' ' << height << "\" font-family=\"sans-serif\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  draw_panel(svg, Panel{kTop, 0.0, 1.0, "Attack success probability", "#1f77b4"}, rows, x_min, x_max,
             [](const SweepRow& r) { return r.success_probability; });
  draw_panel(svg, Panel{kTop + kPanelHeight + kGap, 0.0, cost_max * 1.05, "Expected corruption cost / (phi gamma R)", "#d62728"}, rows,
             x_min, x_max, [](const SweepRow& r) { return r.corruption_over_phi_gamma_R; });
  svg << "<text x=\"" << kLeft + (kWidth - kLeft - kRight) / 2 << "\" y=\"" << height - 10
      << "\" font-size=\"13\" text-anchor=\"middle\">" << vary << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace bribelab::cli
