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

// riswap: run figure sweeps, render result grids, inspect configurations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "riswap/config.hpp"
#include "riswap/errors.hpp"
#include "riswap/experiments.hpp"
#include "riswap/result_grid.hpp"
#include "riswap/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct RunArgs {
  std::string config_path;
  std::string experiment;
  std::string preset;
  std::string out;
  std::vector<std::string> overrides;
};

struct RenderArgs {
  std::string csv;
  std::string kind = "line";
  std::string out;
  std::string column;
  std::string title;
  bool log_y = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw riswap::ValidationError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

riswap::config::RunConfig load(const RunArgs& args) {
  riswap::config::RunConfig cfg =
      args.config_path.empty() ? riswap::config::RunConfig{} : riswap::config::parse_config(read_file(args.config_path));
  if (!args.experiment.empty()) cfg.experiment = args.experiment;
  if (!args.preset.empty()) cfg.preset = riswap::experiments::preset_from_string(args.preset);
  if (!args.out.empty()) cfg.path = args.out;
  for (const auto& o : args.overrides) riswap::config::apply_override(cfg, o);
  for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << '\n';
  return cfg;
}

int cmd_run(const RunArgs& args) {
  const auto cfg = load(args);
  const auto spec = cfg.to_sweep();
  const std::string path = cfg.path.value_or(spec.experiment + ".csv");
  const riswap::ResultGrid grid = riswap::experiments::run(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kExitFailure;
  }
  grid.write_csv(out);
  std::cout << "wrote " << grid.rows.size() << " rows to " << path << '\n';
  return kExitOk;
}

int cmd_validate(const RunArgs& args) {
  const auto cfg = load(args);
  const auto spec = cfg.to_sweep();
  std::cout << "ok: experiment " << spec.experiment << ", " << spec.axes.size() << " axis/axes, "
            << spec.schemes.size() << " scheme(s)\n";
  std::cout << riswap::config::serialize(cfg);
  return kExitOk;
}

int cmd_render(const RenderArgs& args) {
  std::istringstream in(read_file(args.csv));
  const riswap::ResultGrid grid = riswap::ResultGrid::read_csv(in);
  riswap::svg::RenderOptions options;
  options.kind = riswap::svg::kind_from_string(args.kind);
  if (!args.column.empty()) options.column = args.column;
  options.log_y = args.log_y;
  options.title = args.title.empty() ? grid.meta("experiment").value_or("") : args.title;
  const std::string out = args.out.empty() ? args.csv + ".svg" : args.out;
  riswap::svg::render_to_file(grid, options, out);
  std::cout << "wrote " << out << '\n';
  return kExitOk;
}

int cmd_list() {
  for (const auto& e : riswap::experiments::registry()) std::cout << e.id << "  " << e.description << '\n';
  return kExitOk;
}

void add_run_options(CLI::App* cmd, RunArgs& args) {
  cmd->add_option("-c,--config", args.config_path, "configuration file");
  cmd->add_option("-e,--experiment", args.experiment, "experiment id (see list-experiments)");
  cmd->add_option("-p,--preset", args.preset, "grid resolution: desk or full");
  cmd->add_option("-o,--out", args.out, "output CSV path");
  cmd->add_option("-s,--set", args.overrides, "override, e.g. noise.order=15")->take_all();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust iSWAP gate simulator for exchange-coupled spin qubits"};
  app.set_version_flag("--version", std::string(RISWAP_VERSION));
  app.require_subcommand(1);

  RunArgs run_args;
  RunArgs validate_args;
  RenderArgs render_args;

  auto* run = app.add_subcommand("run", "run an experiment sweep and write a CSV result grid");
  add_run_options(run, run_args);

  auto* validate = app.add_subcommand("validate", "parse and resolve a configuration without running it");
  add_run_options(validate, validate_args);

  auto* render = app.add_subcommand("render", "render a result grid CSV as SVG");
  render->add_option("csv", render_args.csv, "result grid CSV")->required();
  render->add_option("-k,--kind", render_args.kind, "line or heatmap");
  render->add_option("-o,--out", render_args.out, "output SVG path");
  render->add_option("--column", render_args.column, "heatmap value column");
  render->add_option("--title", render_args.title, "plot title");
  render->add_flag("--log-y", render_args.log_y, "logarithmic y axis (line plots)");

  auto* list = app.add_subcommand("list-experiments", "print the registered experiment ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*run) return cmd_run(run_args);
    if (*validate) return cmd_validate(validate_args);
    if (*render) return cmd_render(render_args);
    if (*list) return cmd_list();
  } catch (const riswap::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
