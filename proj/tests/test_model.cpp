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
#include <random>

#include "doctest.h"
#include "riswap/errors.hpp"
#include "riswap/model.hpp"
#include "riswap/units.hpp"
#include "test_util.hpp"

using namespace riswap;
using model::Complex;
using model::ComplexMatrix;
using testing::distance;

namespace {

// Spin operator built straight from basis bits: index = q1 + 2·q2, bit 0 = ↑.
ComplexMatrix spin_oracle(char axis, int qubit) {
  ComplexMatrix m(4);
  const int shift = qubit - 1;
  for (int col = 0; col < 4; ++col) {
    const int bit = (col >> shift) & 1;
    const int flipped = col ^ (1 << shift);
    switch (axis) {
      case 'x': m(flipped, col) = 0.5; break;
      case 'y': m(flipped, col) = bit == 0 ? Complex(0.0, 0.5) : Complex(0.0, -0.5); break;
      default: m(col, col) = bit == 0 ? 0.5 : -0.5;
    }
  }
  return m;
}

ComplexMatrix printed_rwa(double d1, double d2, double o1, double o2, double j) {
  return ComplexMatrix(4, {(d1 + d2) / 2 + j / 4, o1 / 2, o2 / 2, 0.0,  //
                           o1 / 2, (d2 - d1) / 2 - j / 4, 0.0, o2 / 2,  //
                           o2 / 2, 0.0, (d1 - d2) / 2 - j / 4, o1 / 2,  //
                           0.0, o2 / 2, o1 / 2, -(d1 + d2) / 2 + j / 4});
}

// Dressed-frame matrix with the Ω₋ diagonal in the sign the fixed basis produces.
ComplexMatrix dressed_oracle(double d1, double d2, double o1, double o2, double j) {
  const double op = o1 + o2;
  const double om = o1 - o2;
  return ComplexMatrix(4, {op / 2, -d1 / 2, -d2 / 2, j / 4,  //
                           -d1 / 2, -om / 2, j / 4, -d2 / 2,  //
                           -d2 / 2, j / 4, om / 2, -d1 / 2,   //
                           j / 4, -d2 / 2, -d1 / 2, -op / 2});
}

double bessel_series(int k, double x) {
  double sum = 0.0;
  for (int m = 0; m < 80; ++m) {
    sum += std::exp((2 * m + k) * std::log(std::abs(x) / 2) - std::lgamma(m + 1.0) - std::lgamma(m + k + 1.0));
  }
  return (x < 0 && k % 2 == 1) ? -sum : sum;
}

}  // namespace

TEST_CASE("spin operators follow the basis convention") {
  for (int q : {1, 2}) {
    CHECK(distance(model::spin_x(q), spin_oracle('x', q)) <= 1e-15);
    CHECK(distance(model::spin_y(q), spin_oracle('y', q)) <= 1e-15);
    CHECK(distance(model::spin_z(q), spin_oracle('z', q)) <= 1e-15);
    CHECK(distance(model::spin_plus(q) + model::spin_minus(q), 2.0 * spin_oracle('x', q)) <= 1e-15);
  }
  CHECK_THROWS_AS(model::spin_x(3), DomainError);
}

TEST_CASE("RWA Hamiltonian matches the explicit matrix") {
  model::SystemParams p = model::SystemParams::defaults();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    model::DriveSettings d;
    d.omega1 = units::mhz(20 * u(rng));
    d.omega2 = units::mhz(20 * u(rng));
    model::ErrorRealization err;
    err.delta1 = units::mhz(u(rng));
    err.delta2 = units::mhz(u(rng));
    const double j = units::mhz(15 * std::abs(u(rng)));
    const auto h = model::h_rwa_total(p, d, j, err);
    const auto oracle = printed_rwa(err.delta1, err.delta2, d.omega1, d.omega2, j);
    CHECK(distance(h, oracle) <= 1e-12 * oracle.frobenius_norm());
    CHECK(qalg::hermiticity_defect(h) <= 1e-12);
  }
}

TEST_CASE("RWA Hamiltonian examples") {
  const auto p = model::SystemParams::defaults();
  CHECK(model::h_rwa_total(p, {}, 0.0, {}).frobenius_norm() == 0.0);

  model::ErrorRealization err;
  err.delta1 = units::mhz(0.1);
  const auto h = model::h_rwa_total(p, {}, 0.0, err);
  const double d = err.delta1 / 2;
  CHECK(distance(h, ComplexMatrix::diagonal(std::vector<double>{d, -d, d, -d})) <= 1e-9);

  model::DriveSettings drives;
  drives.omega1 = drives.omega2 = units::mhz(10);
  const double j = units::mhz(15);
  const auto hs = model::h_rwa_total(p, drives, j, {});
  CHECK(hs(0, 0).real() == doctest::Approx(j / 4));
  CHECK(hs(0, 1).real() == doctest::Approx(drives.omega1 / 2));
  CHECK(hs(1, 3).real() == doctest::Approx(drives.omega2 / 2));
}

TEST_CASE("amplitude and exchange errors enter the RWA Hamiltonian") {
  const auto p = model::SystemParams::defaults();
  model::DriveSettings d;
  d.omega1 = units::mhz(10);
  d.omega2 = units::mhz(12);
  model::ErrorRealization err;
  err.eps1 = 0.05;
  err.eps2 = -0.03;
  err.delta_j = units::mhz(0.2);
  const double j = units::mhz(15);
  const auto h = model::h_rwa_total(p, d, j, err);
  const auto oracle = printed_rwa(0, 0, 1.05 * d.omega1, 0.97 * d.omega2, j + err.delta_j);
  CHECK(distance(h, oracle) <= 1e-12 * oracle.frobenius_norm());
}

TEST_CASE("conventional exchange Hamiltonian") {
  CHECK(model::h_conventional_rwa(0.0, 0.0, {}).frobenius_norm() == 0.0);
  const double j = units::mhz(15);
  const auto h = model::h_conventional_rwa(units::mhz(7.5), j, {});
  CHECK(h(1, 2).real() == doctest::Approx(j / 4));
  CHECK(qalg::hermiticity_defect(h) <= 1e-12);

  const auto u = qalg::expm_hermitian_prop(model::h_conventional_rwa(0.0, j, {}), units::kTwoPi / j);
  CHECK(std::abs(u(2, 1)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(u(1, 2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(u(1, 1)) <= 1e-12);

  model::ErrorRealization err;
  err.delta1 = units::mhz(0.3);
  err.delta2 = -err.delta1;
  const auto hd = model::h_conventional_rwa(0.0, j, err) - model::h_conventional_rwa(0.0, j, {});
  CHECK(std::abs(hd(0, 0)) <= 1e-9);
  CHECK(std::abs(hd(3, 3)) <= 1e-9);
  CHECK(hd(1, 1).real() == doctest::Approx(-err.delta1));
  CHECK(hd(2, 2).real() == doctest::Approx(err.delta1));
  CHECK_THROWS_AS(model::h_conventional_rwa(-1.0, j, {}), DomainError);
}

TEST_CASE("dressed transform") {
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMatrix single(2, {s, -s, s, s});
  const auto oracle = qalg::kron(single, single);
  const auto S = model::dressed_transform();
  CHECK(distance(S, oracle) <= 1e-13);
  CHECK(qalg::unitarity_defect(S) <= 1e-13);

  const auto p = model::SystemParams::defaults();
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    model::DriveSettings d;
    d.omega1 = units::mhz(20 * u(rng));
    d.omega2 = units::mhz(20 * u(rng));
    model::ErrorRealization err;
    err.delta1 = units::mhz(u(rng));
    err.delta2 = units::mhz(u(rng));
    const double j = units::mhz(15 * std::abs(u(rng)));
    const auto hd = model::to_dressed_frame(model::h_rwa_total(p, d, j, err));
    const auto expect = dressed_oracle(err.delta1, err.delta2, d.omega1, d.omega2, j);
    CHECK(distance(hd, expect) <= 1e-12 * expect.frobenius_norm());
    CHECK(distance(model::from_dressed_frame(hd), model::h_rwa_total(p, d, j, err)) <= 1e-12 * expect.frobenius_norm());
  }

  // A single drive term picks up diagonal ±Ω/2 on its own qubit.
  const double om = units::mhz(10);
  const auto x1 = model::to_dressed_frame(om * model::spin_x(1));
  CHECK(distance(x1, om * model::spin_z(1)) <= 1e-12 * om);
}

TEST_CASE("ideal dressed blocks") {
  const double j = units::mhz(15);
  const auto zero = model::h_dressed_ideal(0.0, j);
  CHECK(distance(zero.s1, zero.s2) == 0.0);
  CHECK(zero.s2(0, 1).real() == doctest::Approx(j / 4));

  const double om = units::mhz(14.5);
  const auto b = model::h_dressed_ideal(om, j);
  const auto b2 = model::h_dressed_ideal(-2 * om, j);
  CHECK(distance(b.s2, b2.s2) == 0.0);
  CHECK(b.s1(0, 0).real() == doctest::Approx(om));
  CHECK(b.s1(1, 1).real() == doctest::Approx(-om));

  const auto z = model::h_dressed_ideal(om, j, true);
  CHECK(z.s1(0, 1).real() == doctest::Approx(-j / 4));
  CHECK(z.s1(0, 0) == b.s1(0, 0));
  CHECK(distance(z.s2, b.s2) == 0.0);

  model::DriveSettings d;
  d.omega1 = d.omega2 = om;
  const auto hd = model::to_dressed_frame(model::h_rwa_total(model::SystemParams::defaults(), d, j, {}));
  CHECK(distance(hd, model::assemble_dressed(b)) <= 1e-12 * hd.frobenius_norm());
  CHECK(distance(model::subspace_block(hd, model::kS1Indices), b.s1) <= 1e-12 * hd.frobenius_norm());
  CHECK(distance(model::subspace_block(hd, model::kS2Indices), b.s2) <= 1e-12 * hd.frobenius_norm());
}

TEST_CASE("full interaction-picture Hamiltonian") {
  const auto p = model::SystemParams::defaults();
  const double j = units::mhz(15);

  SUBCASE("Hermitian at all times") {
    model::DriveSettings d;
    d.omega1 = units::mhz(14);
    d.omega2 = units::mhz(-9);
    model::ErrorRealization err;
    err.delta1 = units::mhz(0.2);
    for (double t : {0.0, 1e-11, 3.7e-10, 4.2e-8}) {
      const auto h = model::h_interaction_full(t, p, d, model::ConstantExchange{j}, err);
      CHECK(qalg::hermiticity_defect(h) <= 1e-12);
    }
    CHECK_THROWS_AS(model::h_interaction_full(-1.0, p, d, model::ConstantExchange{j}, err), DomainError);
  }

  SUBCASE("drives at t = 0 are twice their RWA value") {
    model::DriveSettings d;
    d.omega1 = units::mhz(14);
    d.omega2 = units::mhz(11);
    const auto h = model::h_interaction_full(0.0, p, d, model::ConstantExchange{0.0}, {});
    const auto rwa = model::h_rwa_total(p, d, 0.0, {});
    CHECK(distance(h, 2.0 * rwa) <= 1e-12 * rwa.frobenius_norm());
  }

  SUBCASE("flip-flop term oscillates at the Zeeman difference") {
    const double period = units::kTwoPi / std::abs(p.delta_ez());
    const auto h0 = model::h_interaction_full(0.0, p, {}, model::ConstantExchange{j}, {});
    const auto h1 = model::h_interaction_full(period, p, {}, model::ConstantExchange{j}, {});
    const auto hq = model::h_interaction_full(period / 4, p, {}, model::ConstantExchange{j}, {});
    CHECK(distance(h0, h1) <= 1e-9 * h0.frobenius_norm());
    CHECK(std::abs(h0(2, 1) - Complex(j / 2, 0.0)) <= 1e-9 * j);
    CHECK(std::abs(std::abs(hq(2, 1)) - j / 2) <= 1e-9 * j);
    CHECK(std::abs(hq(2, 1).real()) <= 1e-6 * j);
  }

  SUBCASE("time average recovers the RWA Hamiltonian") {
    // Exchange part over one ΔE_z period.
    const int n = 512;
    const double period = units::kTwoPi / std::abs(p.delta_ez());
    ComplexMatrix avg(4);
    for (int i = 0; i < n; ++i) {
      avg += model::h_interaction_full(period * (i + 0.5) / n, p, {}, model::ConstantExchange{j}, {});
    }
    avg *= 1.0 / n;
    const auto rwa = model::h_rwa_total(p, {}, j, {});
    CHECK(distance(avg, rwa) <= 1e-3 * rwa.frobenius_norm());

    // Drive on qubit 1 over one period of its counter-rotating partner.
    model::DriveSettings d;
    d.omega1 = units::mhz(14);
    const double drive_period = units::kTwoPi / (2.0 * p.bz1);
    ComplexMatrix davg(4);
    for (int i = 0; i < n; ++i) {
      davg += model::h_interaction_full(drive_period * (i + 0.5) / n, p, d, model::ConstantExchange{0.0}, {});
    }
    davg *= 1.0 / n;
    const auto drwa = model::h_rwa_total(p, d, 0.0, {});
    CHECK(distance(davg, drwa) <= 1e-3 * drwa.frobenius_norm());
  }

  SUBCASE("detuning only") {
    model::ErrorRealization err;
    err.delta1 = units::mhz(0.4);
    err.delta2 = units::mhz(-0.1);
    const auto h = model::h_interaction_full(2.5e-9, p, {}, model::ConstantExchange{0.0}, err);
    CHECK(distance(h, model::h_rwa_total(p, {}, 0.0, err)) <= 1e-12 * h.frobenius_norm());
  }
}

TEST_CASE("exchange-voltage relation") {
  const auto m = model::SystemParams::defaults().exchange_model;
  CHECK(model::exchange_from_voltage(m, 0.0) == doctest::Approx(units::khz(10)));
  const double v = model::voltage_for_exchange(m, units::mhz(15));
  CHECK(2 * m.alpha * v == doctest::Approx(std::log(1500.0)).epsilon(1e-12));
  for (double vv : {0.0, 0.01, 0.2, 0.365}) {
    const double back = model::voltage_for_exchange(m, model::exchange_from_voltage(m, vv));
    CHECK(std::abs(back - vv) <= 1e-12 * std::max(vv, 1e-3));
  }
  CHECK(model::voltage_for_exchange(m, 0.5 * m.j0) == 0.0);
  CHECK_THROWS_AS(model::voltage_for_exchange(m, 0.0), DomainError);
  CHECK_THROWS_AS(model::voltage_for_exchange(m, -1.0), DomainError);

  // J((1+ε)v)/J(v) = (J/J₀)^ε
  const double j = units::mhz(15);
  const double ratio = model::exchange_from_voltage(m, 1.01 * v) / j;
  CHECK(ratio == doctest::Approx(std::pow(1500.0, 0.01)).epsilon(1e-12));
  CHECK(ratio - 1.0 == doctest::Approx(0.0758).epsilon(0.01));
}

TEST_CASE("voltage-mode conventional waveform error") {
  const auto p = model::SystemParams::defaults();
  model::ConventionalWaveform w{units::mhz(7.5), units::mhz(7.5), std::abs(p.delta_ez()), true, 0.0};
  CHECK(model::max_relative_exchange_error(w, p.exchange_model) <= 1e-12);
  w.eps_v = 0.01;
  const double e = model::max_relative_exchange_error(w, p.exchange_model);
  CHECK(e == doctest::Approx(std::pow(1500.0, 0.01) - 1.0).epsilon(1e-6));
  // The clamp keeps the applied exchange at J₀ near the trough.
  CHECK(model::exchange_at(w, p.exchange_model, units::kTwoPi / w.omega_mod / 2) ==
        doctest::Approx(p.exchange_model.j0));
}

TEST_CASE("modified Bessel functions") {
  CHECK(model::bessel_i(0, 0.0) == 1.0);
  CHECK(model::bessel_i(1, 0.0) == 0.0);
  CHECK(model::bessel_i(0, 1.0) == doctest::Approx(1.2660658777520082).epsilon(1e-14));
  for (int k = 0; k <= 6; ++k) {
    for (double x : {-7.3, -1.0, 0.25, 1.0, 3.5, 12.0, 29.0}) {
      const double oracle = bessel_series(k, x);
      CHECK(std::abs(model::bessel_i(k, x) - oracle) <= 1e-12 * std::abs(oracle));
    }
  }
  CHECK_THROWS_AS(model::bessel_i(0, 31.0), DomainError);
  CHECK_THROWS_AS(model::bessel_i(-1, 1.0), DomainError);
}

TEST_CASE("harmonic decomposition") {
  const auto m = model::SystemParams::defaults().exchange_model;
  const double v0 = 0.2;

  const auto dc = model::harmonic_decomposition(m, v0, 0.0, 3);
  for (const auto& h : dc) {
    CHECK(h.coefficient == doctest::Approx(h.k == 0 ? m.j0 * std::exp(2 * m.alpha * v0) : 0.0));
  }

  const double v1 = 1.0 / (2 * m.alpha);
  const auto one = model::harmonic_decomposition(m, v0, v1, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].coefficient / (m.j0 * std::exp(2 * m.alpha * v0)) == doctest::Approx(1.26607).epsilon(1e-5));

  const double v1b = 0.15;
  const int k_max = 30;
  const auto c = model::harmonic_decomposition(m, v0, v1b, k_max);
  REQUIRE(c.size() == 2 * k_max + 1);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i].coefficient == c[c.size() - 1 - i].coefficient);
  const double omega = units::mhz(300);
  for (double t : {0.0, 1e-10, 1.3e-9}) {
    double sum = 0.0;
    for (const auto& h : c) sum += h.coefficient * std::cos(h.k * omega * t);
    const double direct = m.j0 * std::exp(2 * m.alpha * (v0 + v1b * std::cos(omega * t)));
    CHECK(sum == doctest::Approx(direct).epsilon(1e-10));
  }

  // Stronger modulation pushes weight into higher harmonics.
  auto ratio = [&](double amp) {
    const auto h = model::harmonic_decomposition(m, v0, amp, 2);
    return h[4].coefficient / h[3].coefficient;
  };
  CHECK(ratio(0.05) < ratio(0.1));
  CHECK(ratio(0.1) < ratio(0.3));
}

TEST_CASE("system parameter validation") {
  auto p = model::SystemParams::defaults();
  CHECK(p.validate().empty());
  CHECK(units::to_ghz(p.e_avg()) == doctest::Approx(17.0));
  CHECK(units::to_ghz(p.delta_ez()) == doctest::Approx(0.3));
  p.j_max = units::mhz(100);
  CHECK_FALSE(p.validate().empty());
  p.bz2 = p.bz1;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  p = model::SystemParams::defaults();
  p.t2_echo = 0.0;
  CHECK_THROWS_AS(p.validate(), ValidationError);
  model::ErrorRealization err;
  err.weight = -1.0;
  CHECK_THROWS_AS(err.validate(), ValidationError);
}
