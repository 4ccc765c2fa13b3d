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


#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "riswap/svg.hpp"

using namespace riswap;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

ResultGrid line_grid() {
  ResultGrid g;
  g.axis_count = 1;
  g.columns = {"eps_v", "max_eps_j", "infidelity"};
  for (int i = 0; i <= 10; ++i) {
    const double e = 0.002 * i;
    g.rows.push_back({e, std::pow(1500.0, e) - 1.0, 2e-3 + 0.5 * e * e});
  }
  return g;
}

ResultGrid heat_grid() {
  ResultGrid g;
  g.axis_count = 2;
  g.columns = {"dtau1", "dtau2", "fidelity"};
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double a = -0.02 + 0.01 * i;
      const double b = -0.02 + 0.04 * j / 3;
      g.rows.push_back({a, b, 0.998 - a * a - b * b});
    }
  }
  return g;
}

}  // namespace

TEST_CASE("dual-series line plot") {
  svg::RenderOptions opt;
  const std::string s = svg::render(line_grid(), opt);
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("width=\"800\" height=\"640\"") != std::string::npos);
  CHECK(count(s, "<path") == 2);
  CHECK(s.find("max_eps_j") != std::string::npos);
  CHECK(s.find("infidelity") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);

  opt.log_y = true;
  const std::string log = svg::render(line_grid(), opt);
  CHECK(log != s);
  CHECK(count(log, "<path") == 2);
}

TEST_CASE("heatmap") {
  svg::RenderOptions opt;
  opt.kind = svg::PlotKind::heatmap;
  opt.title = "timing <errors>";
  const std::string s = svg::render(heat_grid(), opt);
  CHECK(s.find("width=\"800\" height=\"640\"") != std::string::npos);
  CHECK(s.find("timing &lt;errors&gt;") != std::string::npos);
  CHECK(s.find("max 0.997956") != std::string::npos);  // 0.998 − (0.02/3)²
  CHECK(s.find("min ") != std::string::npos);

  auto g = heat_grid();
  g.rows[3][2] = NAN;
  CHECK(svg::render(g, opt).find("#bbbbbb") != std::string::npos);

  opt.column = "nothing";
  CHECK_THROWS(svg::render(heat_grid(), opt));
}

TEST_CASE("schema mismatches are render errors") {
  svg::RenderOptions heat;
  heat.kind = svg::PlotKind::heatmap;
  CHECK_THROWS_AS(svg::render(line_grid(), heat), svg::RenderError);

  auto ragged = heat_grid();
  ragged.rows.pop_back();
  CHECK_THROWS_AS(svg::render(ragged, heat), svg::RenderError);

  auto bad = line_grid();
  bad.rows[0].push_back(1.0);
  CHECK_THROWS_AS(svg::render(bad, {}), svg::RenderError);

  CHECK_THROWS_AS(svg::kind_from_string("pie"), svg::RenderError);
  CHECK(svg::kind_from_string("heatmap") == svg::PlotKind::heatmap);
}

TEST_CASE("empty data fails without writing a file") {
  const auto dir = std::filesystem::temp_directory_path() / "riswap_svg_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "empty.svg";
  std::filesystem::remove(path);
  auto g = line_grid();
  g.rows.clear();
  CHECK_THROWS_AS(svg::render_to_file(g, {}, path.string()), svg::RenderError);
  CHECK_FALSE(std::filesystem::exists(path));

  svg::render_to_file(line_grid(), {}, path.string());
  CHECK(std::filesystem::file_size(path) > 100);
  std::filesystem::remove_all(dir);
}
