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
#include <numeric>

#include "doctest.h"
#include "riswap/dynamics.hpp"
#include "riswap/errors.hpp"
#include "riswap/metrics.hpp"
#include "riswap/noise.hpp"
#include "riswap/schemes.hpp"
#include "riswap/units.hpp"

using namespace riswap;
using noise::Method;
using noise::NoiseAveragingConfig;

namespace {

double weight_sum(const std::vector<model::ErrorRealization>& r) {
  double s = 0.0;
  for (const auto& e : r) s += e.weight;
  return s;
}

double double_factorial(int n) { return n <= 0 ? 1.0 : n * double_factorial(n - 2); }

double gh_average_fidelity(const std::string& name, double sigma, int order) {
  const auto p = model::SystemParams::defaults();
  const auto spec = schemes::scheme_from_name(name, p);
  const auto seq = schemes::compile(spec, p);
  const auto target = schemes::ideal_target(spec);
  NoiseAveragingConfig cfg;
  cfg.order = order;
  cfg.sigma_delta = sigma;
  double f = 0.0;
  for (const auto& r : noise::sample_noise(cfg)) {
    f += r.weight * metrics::average_gate_fidelity_unitary(dynamics::propagate_rwa(seq, r), target);
  }
  return f;
}

}  // namespace

TEST_CASE("order-3 Gauss-Hermite rule") {
  const auto rule = noise::gauss_hermite_rule(3);
  REQUIRE(rule.nodes.size() == 3);
  CHECK(rule.nodes[0] == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-14));
  CHECK(rule.nodes[1] == 0.0);
  CHECK(rule.nodes[2] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(rule.weights[0] == doctest::Approx(1.0 / 6).epsilon(1e-14));
  CHECK(rule.weights[1] == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(rule.weights[2] == doctest::Approx(1.0 / 6).epsilon(1e-14));

  NoiseAveragingConfig cfg;
  cfg.order = 3;
  cfg.sigma_delta = units::mhz(0.1);
  const auto r = noise::sample_noise(cfg);
  REQUIRE(r.size() == 9);
  CHECK(r[0].delta1 == doctest::Approx(-std::sqrt(3.0) * cfg.sigma_delta));
  CHECK(r[0].delta2 == doctest::Approx(-std::sqrt(3.0) * cfg.sigma_delta));
  CHECK(r[4].delta1 == 0.0);
  CHECK(r[4].weight == doctest::Approx(4.0 / 9));
}

TEST_CASE("Gauss-Hermite rules integrate Gaussian moments exactly") {
  for (int order = 3; order <= 21; order += 2) {
    const auto rule = noise::gauss_hermite_rule(order);
    CHECK(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    for (int m = 0; m <= 2 * order - 1; ++m) {
      double moment = 0.0;
      double scale = 0.0;
      for (int i = 0; i < order; ++i) {
        moment += rule.weights[i] * std::pow(rule.nodes[i], m);
        scale += rule.weights[i] * std::pow(std::abs(rule.nodes[i]), m);
      }
      const double exact = m % 2 == 1 ? 0.0 : double_factorial(m - 1);
      CHECK(std::abs(moment - exact) <= 1e-12 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("realization sets") {
  SUBCASE("zero width gives the base realization") {
    model::ErrorRealization base;
    base.eps1 = 0.03;
    const auto r = noise::sample_noise(NoiseAveragingConfig{}, base);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == base);
  }

  SUBCASE("dimensions and weights") {
    NoiseAveragingConfig cfg;
    cfg.sigma_delta = units::mhz(0.1);
    cfg.sigma_j = units::mhz(0.2);
    const auto r = noise::sample_noise(cfg);
    CHECK(r.size() == 9 * 9 * 9);
    CHECK(weight_sum(r) == doctest::Approx(1.0).epsilon(1e-12));

    cfg.sigma_delta = 0.0;
    const auto j_only = noise::sample_noise(cfg);
    CHECK(j_only.size() == 9);
    for (const auto& e : j_only) CHECK(e.delta1 == 0.0);
  }

  SUBCASE("offsets add to the base") {
    model::ErrorRealization base;
    base.delta1 = units::mhz(0.3);
    NoiseAveragingConfig cfg;
    cfg.sigma_delta = units::mhz(0.1);
    double mean = 0.0;
    for (const auto& e : noise::sample_noise(cfg, base)) mean += e.weight * e.delta1;
    CHECK(mean == doctest::Approx(base.delta1).epsilon(1e-12));
  }

  SUBCASE("grid rule") {
    NoiseAveragingConfig cfg;
    cfg.method = Method::grid;
    cfg.points = 21;
    cfg.sigma_delta = units::mhz(0.1);
    const auto r = noise::sample_noise(cfg);
    CHECK(r.size() == 21 * 21);
    CHECK(weight_sum(r) == doctest::Approx(1.0).epsilon(1e-12));
    const auto rule = noise::uniform_grid_rule(21);
    CHECK(rule.nodes.front() == -4.0);
    CHECK(rule.nodes.back() == 4.0);
  }

  SUBCASE("Monte Carlo is seeded") {
    NoiseAveragingConfig cfg;
    cfg.method = Method::monte_carlo;
    cfg.samples = 200;
    cfg.seed = 42;
    cfg.sigma_delta = units::mhz(0.1);
    const auto a = noise::sample_noise(cfg);
    const auto b = noise::sample_noise(cfg);
    CHECK(a == b);
    CHECK(a.size() == 200);
    CHECK(weight_sum(a) == doctest::Approx(1.0).epsilon(1e-12));
    cfg.seed = 43;
    CHECK_FALSE(noise::sample_noise(cfg) == a);

    cfg.samples = 20000;
    cfg.seed = 7;
    double var = 0.0;
    for (const auto& e : noise::sample_noise(cfg)) var += e.weight * e.delta1 * e.delta1;
    CHECK(std::sqrt(var) == doctest::Approx(cfg.sigma_delta).epsilon(0.03));
  }
}

TEST_CASE("configuration validation") {
  NoiseAveragingConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.order = 4;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg.order = 23;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = {};
  cfg.sigma_delta = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = {};
  cfg.samples = 0;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  cfg = {};
  cfg.points = 4;
  CHECK_THROWS_AS(cfg.validate(), ValidationError);
  CHECK(noise::method_from_string("monte_carlo") == Method::monte_carlo);
  CHECK(noise::to_string(Method::grid) == "grid");
  CHECK_THROWS_AS(noise::method_from_string("sobol"), ValidationError);
}

TEST_CASE("T2* of Gaussian quasi-static noise") {
  CHECK(units::to_us(noise::t2_star(units::mhz(0.1))) == doctest::Approx(2.25).epsilon(0.001));
  CHECK(units::to_mhz(std::sqrt(2.0) / units::us(1.0)) == doctest::Approx(0.225).epsilon(0.001));
  CHECK_THROWS_AS(noise::t2_star(0.0), DomainError);
}

TEST_CASE("Gauss-Hermite averages converge with order") {
  for (const char* name : {"conventional", "A"}) {
    const double sigma = units::mhz(0.3);
    const double f9 = gh_average_fidelity(name, sigma, 9);
    const double f15 = gh_average_fidelity(name, sigma, 15);
    const double f21 = gh_average_fidelity(name, sigma, 21);
    CHECK(std::abs(f15 - f21) <= 1e-6);
    CHECK(std::abs(f9 - f21) <= 1e-4);

    NoiseAveragingConfig mc;
    mc.method = Method::monte_carlo;
    mc.samples = 4000;
    mc.seed = 3;
    mc.sigma_delta = sigma;
    const auto p = model::SystemParams::defaults();
    const auto spec = schemes::scheme_from_name(name, p);
    const auto seq = schemes::compile(spec, p);
    double f = 0.0;
    for (const auto& r : noise::sample_noise(mc)) {
      f += r.weight * metrics::average_gate_fidelity_unitary(dynamics::propagate_rwa(seq, r), schemes::ideal_target(spec));
    }
    CHECK(std::abs(f - f21) <= 5e-3);
  }
}
