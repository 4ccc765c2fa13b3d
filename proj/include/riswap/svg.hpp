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

#pragma once

#include <optional>
#include <string>

#include "riswap/errors.hpp"
#include "riswap/result_grid.hpp"

/// Minimal self-contained SVG plots of result grids.
namespace riswap::svg {

class RenderError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

enum class PlotKind { line, heatmap };

PlotKind kind_from_string(const std::string& text);

struct RenderOptions {
  PlotKind kind = PlotKind::line;
  std::optional<std::string> column;  // heatmap value column; default: first
  bool log_y = false;                 // line plots only
  std::string title;
};

inline constexpr int kWidth = 800;
inline constexpr int kHeight = 640;

/// Line plot: one series per value column against the first axis.
/// Heatmap: needs two axes on a full rectangular grid.
/// RenderError on schema mismatch or when there are no data rows.
std::string render(const ResultGrid& grid, const RenderOptions& options);

/// Renders first, then writes; nothing is written if rendering fails.
void render_to_file(const ResultGrid& grid, const RenderOptions& options, const std::string& path);

}  // namespace riswap::svg
