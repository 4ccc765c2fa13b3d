// Copyright 2026 The riswap Authors
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

#include "riswap/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace riswap::svg {

namespace {

constexpr double kMarginLeft = 90.0;
constexpr double kMarginRight = 150.0;
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 70.0;

const std::array<const char*, 6> kSeriesColors = {"#1f77b4", "#d62728", "#2ca02c", "#000000", "#9467bd", "#ff7f0e"};

// Viridis-like stops; luminance increases monotonically.
const std::array<std::array<double, 3>, 5> kRamp = {{{68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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

std::string ramp_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const double pos = t * (kRamp.size() - 1);
  const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(pos), kRamp.size() - 2);
  const double f = pos - static_cast<double>(i);
  char buf[16];
  int rgb[3];
  for (int c = 0; c < 3; ++c) rgb[c] = static_cast<int>(std::lround(kRamp[i][c] + f * (kRamp[i + 1][c] - kRamp[i][c])));
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

std::string header(const std::string& title) {
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) {
    o << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">" << escape(title)
      << "</text>\n";
  }
  return o.str();
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool valid() const { return lo <= hi; }
  void pad() {
    if (lo == hi) {
      const double d = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
      lo -= d;
      hi += d;
    }
  }
};

std::string render_line(const ResultGrid& grid, const RenderOptions& options) {
  if (grid.axis_count < 1) throw RenderError("line plot needs at least one axis column");
  const auto series = grid.value_columns();
  if (series.empty()) throw RenderError("line plot needs at least one value column");
  const std::vector<double> x = grid.column(grid.columns[0]);

  Range xr, yr;
  for (double v : x) xr.add(v);
  for (const auto& s : series) {
    for (double v : grid.column(s)) {
      if (options.log_y) {
        if (v > 0.0) yr.add(std::log10(v));
      } else {
        yr.add(v);
      }
    }
  }
  if (!xr.valid() || !yr.valid()) throw RenderError("no finite data to plot");
  xr.pad();
  yr.pad();
  const double w = kWidth - kMarginLeft - kMarginRight;
  const double h = kHeight - kMarginTop - kMarginBottom;
  auto sx = [&](double v) { return kMarginLeft + (v - xr.lo) / (xr.hi - xr.lo) * w; };
  auto sy = [&](double v) { return kMarginTop + h - (v - yr.lo) / (yr.hi - yr.lo) * h; };

  std::ostringstream o;
  o << header(options.title);
  o << "<rect x=\"" << px(kMarginLeft) << "\" y=\"" << px(kMarginTop) << "\" width=\"" << px(w) << "\" height=\""
    << px(h) << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double yv = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    o << "<text x=\"" << px(sx(xv)) << "\" y=\"" << px(kMarginTop + h + 18) << "\" text-anchor=\"middle\">" << num(xv)
      << "</text>\n";
    o << "<text x=\"" << px(kMarginLeft - 6) << "\" y=\"" << px(sy(yv) + 4) << "\" text-anchor=\"end\">"
      << (options.log_y ? "1e" + num(yv) : num(yv)) << "</text>\n";
  }
  o << "<text x=\"" << px(kMarginLeft + w / 2) << "\" y=\"" << px(kHeight - 20.0) << "\" text-anchor=\"middle\">"
    << escape(grid.columns[0]) << "</text>\n";
  o << "<text x=\"20\" y=\"" << px(kMarginTop + h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
    << px(kMarginTop + h / 2) << ")\">" << (options.log_y ? "log10(value)" : "value") << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto y = grid.column(series[s]);
    const char* color = kSeriesColors[s % kSeriesColors.size()];
    std::string path;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const bool ok = std::isfinite(y[i]) && (!options.log_y || y[i] > 0.0);
      if (!ok) continue;
      const double yv = options.log_y ? std::log10(y[i]) : y[i];
      path += (path.empty() ? "M" : " L") + px(sx(x[i])) + "," + px(sy(yv));
    }
    if (!path.empty()) {
      o << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    }
    o << "<text x=\"" << px(kMarginLeft + w + 12) << "\" y=\"" << px(kMarginTop + 16 + 18.0 * s) << "\" fill=\""
      << color << "\">" << escape(series[s]) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::string render_heatmap(const ResultGrid& grid, const RenderOptions& options) {
  if (grid.axis_count != 2) throw RenderError("heatmap needs exactly two axis columns");
  const auto values = grid.value_columns();
  if (values.empty()) throw RenderError("heatmap needs a value column");
  const std::string column = options.column.value_or(values.front());
  const std::size_t ci = grid.column_index(column);

  std::map<double, std::size_t> xs, ys;
  for (const auto& r : grid.rows) {
    xs.emplace(r[0], 0);
    ys.emplace(r[1], 0);
  }
  if (xs.size() * ys.size() != grid.rows.size()) throw RenderError("heatmap rows do not form a rectangular grid");
  std::size_t k = 0;
  for (auto& [v, i] : xs) i = k++;
  k = 0;
  for (auto& [v, i] : ys) i = k++;

  Range vr;
  for (const auto& r : grid.rows) vr.add(r[ci]);
  if (!vr.valid()) throw RenderError("heatmap column has no finite values");
  const double lo = vr.lo;
  const double hi = vr.hi;

  const double w = kWidth - kMarginLeft - kMarginRight;
  const double h = kHeight - kMarginTop - kMarginBottom;
  const double cw = w / static_cast<double>(xs.size());
  const double ch = h / static_cast<double>(ys.size());

  std::ostringstream o;
  o << header(options.title.empty() ? column : options.title);
  for (const auto& r : grid.rows) {
    const double x0 = kMarginLeft + cw * static_cast<double>(xs.at(r[0]));
    const double y0 = kMarginTop + h - ch * static_cast<double>(ys.at(r[1]) + 1);
    const std::string fill = std::isfinite(r[ci]) ? ramp_color(hi > lo ? (r[ci] - lo) / (hi - lo) : 0.5) : "#bbbbbb";
    o << "<rect x=\"" << px(x0) << "\" y=\"" << px(y0) << "\" width=\"" << px(cw + 0.5) << "\" height=\""
      << px(ch + 0.5) << "\" fill=\"" << fill << "\"/>\n";
  }
  o << "<rect x=\"" << px(kMarginLeft) << "\" y=\"" << px(kMarginTop) << "\" width=\"" << px(w) << "\" height=\""
    << px(h) << "\" fill=\"none\" stroke=\"#444\"/>\n";

  const double xmin = xs.begin()->first, xmax = xs.rbegin()->first;
  const double ymin = ys.begin()->first, ymax = ys.rbegin()->first;
  o << "<text x=\"" << px(kMarginLeft) << "\" y=\"" << px(kMarginTop + h + 18) << "\">" << num(xmin) << "</text>\n";
  o << "<text x=\"" << px(kMarginLeft + w) << "\" y=\"" << px(kMarginTop + h + 18) << "\" text-anchor=\"end\">"
    << num(xmax) << "</text>\n";
  o << "<text x=\"" << px(kMarginLeft - 6) << "\" y=\"" << px(kMarginTop + h) << "\" text-anchor=\"end\">" << num(ymin)
    << "</text>\n";
  o << "<text x=\"" << px(kMarginLeft - 6) << "\" y=\"" << px(kMarginTop + 10) << "\" text-anchor=\"end\">"
    << num(ymax) << "</text>\n";
  o << "<text x=\"" << px(kMarginLeft + w / 2) << "\" y=\"" << px(kHeight - 20.0) << "\" text-anchor=\"middle\">"
    << escape(grid.columns[0]) << "</text>\n";
  o << "<text x=\"20\" y=\"" << px(kMarginTop + h / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
    << px(kMarginTop + h / 2) << ")\">" << escape(grid.columns[1]) << "</text>\n";

  // Color bar with min/max annotation.
  const double bx = kMarginLeft + w + 30;
  const int steps = 32;
  for (int i = 0; i < steps; ++i) {
    const double y0 = kMarginTop + h - h * (i + 1) / steps;
    o << "<rect x=\"" << px(bx) << "\" y=\"" << px(y0) << "\" width=\"24\" height=\"" << px(h / steps + 0.5)
      << "\" fill=\"" << ramp_color((i + 0.5) / steps) << "\"/>\n";
  }
  o << "<text x=\"" << px(bx + 30) << "\" y=\"" << px(kMarginTop + 10) << "\">max " << num(hi) << "</text>\n";
  o << "<text x=\"" << px(bx + 30) << "\" y=\"" << px(kMarginTop + h) << "\">min " << num(lo) << "</text>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace

PlotKind kind_from_string(const std::string& text) {
  if (text == "line") return PlotKind::line;
  if (text == "heatmap") return PlotKind::heatmap;
  throw RenderError("unknown plot kind '" + text + "' (expected line or heatmap)");
}

std::string render(const ResultGrid& grid, const RenderOptions& options) {
  try {
    grid.validate();
  } catch (const ValidationError& e) {
    throw RenderError(e.what());
  }
  if (grid.rows.empty()) throw RenderError("result grid has no data rows");
  return options.kind == PlotKind::line ? render_line(grid, options) : render_heatmap(grid, options);
}

void render_to_file(const ResultGrid& grid, const RenderOptions& options, const std::string& path) {
  const std::string text = render(grid, options);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RenderError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw RenderError("failed writing '" + path + "'");
}

}  // namespace riswap::svg
