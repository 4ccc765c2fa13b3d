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

#include "doctest.h"
#include "riswap/errors.hpp"
#include "riswap/experiments.hpp"
#include "riswap/units.hpp"

using namespace riswap;
using experiments::Axis;
using experiments::Preset;
using experiments::SweepSpec;

namespace {

double at(const ResultGrid& g, const std::string& column, double a0, double a1) {
  const std::size_t c = g.column_index(column);
  for (const auto& r : g.rows) {
    if (std::abs(r[0] - a0) < 1e-12 && std::abs(r[1] - a1) < 1e-12) return r[c];
  }
  FAIL("grid point not found");
  return NAN;
}

}  // namespace

TEST_CASE("registry and presets") {
  const auto& r = experiments::registry();
  REQUIRE(r.size() == 7);
  for (const char* id : {"fig2", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9"}) {
    CHECK(experiments::is_registered(id));
    for (Preset p : {Preset::desk, Preset::full}) {
      const SweepSpec s = experiments::default_spec(id, p);
      CHECK_NOTHROW(s.validate());
      for (const auto& a : s.axes) CHECK(a.points == experiments::preset_points(p));
    }
  }
  CHECK_THROWS_AS(experiments::default_spec("fig3", Preset::desk), ValidationError);
  CHECK(experiments::preset_from_string("full") == Preset::full);
  CHECK_THROWS_AS(experiments::preset_from_string("huge"), ValidationError);

  const auto fig7 = experiments::default_spec("fig7", Preset::desk);
  CHECK(fig7.schemes == std::vector<std::string>{"C"});
  CHECK_FALSE(fig7.decoherence);
  CHECK(fig7.integrator.mode == dynamics::Mode::full_counter_rotating);
  const auto fig6 = experiments::default_spec("fig6", Preset::desk);
  CHECK(units::to_mhz(fig6.noise.sigma_delta) == doctest::Approx(0.1));
  CHECK(fig6.decoherence);
}

TEST_CASE("axis values") {
  const Axis a{"eps", -0.05, 0.05, 11};
  const auto v = a.values();
  REQUIRE(v.size() == 11);
  CHECK(v.front() == -0.05);
  CHECK(v.back() == 0.05);
  CHECK(std::abs(v[5]) < 1e-17);
  CHECK_THROWS_AS((Axis{"eps", 0, 1, 1}.values()), ValidationError);
}

TEST_CASE("sweep validation") {
  SweepSpec s = experiments::default_spec("fig6", Preset::desk);
  s.axes[0].name = "bogus";
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s = experiments::default_spec("fig6", Preset::desk);
  s.axes[1].name = s.axes[0].name;
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s = experiments::default_spec("fig6", Preset::desk);
  s.schemes = {};
  CHECK_THROWS_AS(s.validate(), ValidationError);
  s = experiments::default_spec("fig9", Preset::desk);
  s.axes[0].min = -0.1;
  CHECK_THROWS_AS(s.validate(), ValidationError);
}

TEST_CASE("axis application") {
  const auto p = model::SystemParams::defaults();
  auto scheme = schemes::scheme_from_name("A", p);
  model::ErrorRealization fixed;
  noise::NoiseAveragingConfig noise;
  experiments::apply_axis("eps", 0.03, scheme, fixed, noise);
  CHECK(fixed.eps1 == 0.03);
  CHECK(fixed.eps2 == 0.03);
  experiments::apply_axis("sigma_mhz", 0.2, scheme, fixed, noise);
  CHECK(noise.sigma_delta == doctest::Approx(units::mhz(0.2)));
  experiments::apply_axis("delta2_mhz", -0.4, scheme, fixed, noise);
  CHECK(fixed.delta2 == doctest::Approx(units::mhz(-0.4)));
  experiments::apply_axis("eps_omega", 0.1, scheme, fixed, noise);
  CHECK(scheme.omega == doctest::Approx(0.9 * schemes::drive_for_condition(2, p.j_max)));
  CHECK_NOTHROW(scheme.validate());
  CHECK_THROWS_AS(experiments::apply_axis("nope", 0.0, scheme, fixed, noise), ValidationError);

  noise::NoiseAveragingConfig wide;
  wide.sigma_delta = units::mhz(0.31);
  CHECK(experiments::effective_noise(wide, true).order == 15);
  CHECK(experiments::effective_noise(wide, false).order == 9);
  wide.sigma_delta = units::mhz(0.3);
  CHECK(experiments::effective_noise(wide, true).order == 9);
}

TEST_CASE("small fig6 sweep: columns, range and worker independence") {
  SweepSpec s = experiments::default_spec("fig6", Preset::desk);
  s.schemes = {"B", "C"};
  s.axes = {{"eps1", -0.05, 0.05, 3}, {"eps2", -0.05, 0.05, 3}};
  s.noise.order = 3;
  s.workers = 1;
  const ResultGrid one = experiments::run(s);
  s.workers = 3;
  const ResultGrid three = experiments::run(s);
  CHECK(one == three);

  CHECK(one.columns == std::vector<std::string>{"eps1", "eps2", "fidelity_B", "fidelity_C"});
  CHECK(one.rows.size() == 9);
  CHECK(one.axis_count == 2);
  CHECK_NOTHROW(one.validate());
  CHECK(one.meta("experiment") == "fig6");
  CHECK(one.meta("noise_order") == "3");
  CHECK(one.meta("sigma_delta_mhz") == "0.1");
  CHECK(one.meta("code_version").has_value());

  // Symmetric errors leave B on its ridge; asymmetric ones favour C.
  CHECK(at(one, "fidelity_B", 0.05, 0.05) > at(one, "fidelity_B", 0.05, -0.05));
  CHECK(at(one, "fidelity_C", 0.05, -0.05) > at(one, "fidelity_B", 0.05, -0.05));
  for (const auto& r : one.rows) {
    CHECK(r[2] > 0.9);
    CHECK(r[3] <= 1.0);
  }
}

TEST_CASE("shared points agree across experiments") {
  SweepSpec fig5 = experiments::default_spec("fig5", Preset::desk);
  fig5.schemes = {"C"};
  fig5.axes = {{"sigma_mhz", 0.1, 0.2, 2}, {"eps", 0.0, 0.05, 2}};
  fig5.noise.order = 5;
  SweepSpec fig6 = experiments::default_spec("fig6", Preset::desk);
  fig6.schemes = {"C"};
  fig6.axes = {{"eps1", 0.0, 0.05, 2}, {"eps2", 0.0, 0.05, 2}};
  fig6.noise.order = 5;
  const auto a = experiments::run(fig5);
  const auto b = experiments::run(fig6);
  CHECK(std::abs(at(a, "fidelity", 0.1, 0.0) - at(b, "fidelity", 0.0, 0.0)) <= 1e-4);
  CHECK(std::abs(at(a, "fidelity", 0.1, 0.05) - at(b, "fidelity", 0.05, 0.05)) <= 1e-4);
}

TEST_CASE("fig4 symmetry under a global spin flip") {
  SweepSpec s = experiments::default_spec("fig4", Preset::desk);
  s.axes = {{"delta1_mhz", -0.5, 0.5, 3}, {"delta2_mhz", -0.5, 0.5, 3}};
  s.spot_check_full = false;
  const auto g = experiments::run(s);
  CHECK(g.columns.size() == 6);
  for (const char* col : {"fidelity_A", "fidelity_B", "fidelity_C"}) {
    for (double d1 : {-0.5, 0.0, 0.5}) {
      for (double d2 : {-0.5, 0.0, 0.5}) CHECK(std::abs(at(g, col, d1, d2) - at(g, col, -d1, -d2)) <= 1e-4);
    }
  }
  CHECK(at(g, "fidelity_A", 0.0, 0.0) >= 0.997);
  CHECK(at(g, "fidelity_conventional", 0.5, 0.5) < at(g, "fidelity_A", 0.5, 0.5));
  CHECK(at(g, "fidelity_conventional", 0.5, 0.5) < at(g, "fidelity_C", 0.5, 0.5));
}

TEST_CASE("fig4 spot-check column") {
  SweepSpec s = experiments::default_spec("fig4", Preset::desk);
  s.schemes = {"A"};
  s.axes = {{"delta1_mhz", -0.5, 0.5, 2}, {"delta2_mhz", -0.5, 0.5, 2}};
  const auto g = experiments::run(s);
  REQUIRE(g.columns == std::vector<std::string>{"delta1_mhz", "delta2_mhz", "fidelity", "fidelity_full"});
  CHECK(std::isnan(at(g, "fidelity_full", -0.5, 0.5)));
  const double rwa = at(g, "fidelity", 0.5, 0.5);
  const double full = at(g, "fidelity_full", 0.5, 0.5);
  CHECK(std::isfinite(full));
  CHECK(std::abs(rwa - full) <= 3e-3);
}

TEST_CASE("fig2 reports exchange error and infidelity") {
  SweepSpec s = experiments::default_spec("fig2", Preset::desk);
  s.axes = {{"eps_v", 0.0, 0.01, 2}};
  s.noise.sigma_delta = 0.0;
  const auto g = experiments::run(s);
  REQUIRE(g.columns == std::vector<std::string>{"eps_v", "max_eps_j", "infidelity"});
  CHECK(std::abs(g.rows[0][1]) < 1e-12);
  CHECK(g.rows[1][1] == doctest::Approx(std::pow(1500.0, 0.01) - 1).epsilon(1e-6));
  CHECK(g.rows[0][2] < 5e-3);
  CHECK(g.rows[1][2] > g.rows[0][2]);
}

TEST_CASE("fig8 reports infidelity per scheme") {
  SweepSpec s = experiments::default_spec("fig8", Preset::desk);
  s.axes = {{"eps_omega", -0.1, 0.1, 3}};
  s.integrator.mode = dynamics::Mode::rwa;
  const auto g = experiments::run(s);
  REQUIRE(g.columns == std::vector<std::string>{"eps_omega", "infidelity_A", "infidelity_B", "infidelity_C"});
  CHECK(g.rows[1][1] < 1e-9);
  CHECK(g.rows[0][1] > 1e-3);
  for (std::size_t c = 2; c <= 3; ++c) {
    for (const auto& r : g.rows) CHECK(r[c] < 1e-6);
  }
}
