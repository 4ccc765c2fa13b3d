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

#include "riswap/noise.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "riswap/errors.hpp"
#include "riswap/qalg.hpp"

namespace riswap::noise {

namespace {

constexpr double kGridHalfWidth = 4.0;

using Setter = std::function<void(model::ErrorRealization&, double)>;

struct Dimension {
  double sigma;
  Setter set;
};

std::vector<Dimension> active_dimensions(const NoiseAveragingConfig& cfg) {
  std::vector<Dimension> dims;
  if (cfg.sigma_delta > 0.0) {
    dims.push_back({cfg.sigma_delta, [](model::ErrorRealization& e, double x) { e.delta1 += x; }});
    dims.push_back({cfg.sigma_delta, [](model::ErrorRealization& e, double x) { e.delta2 += x; }});
  }
  if (cfg.sigma_j > 0.0) {
    dims.push_back({cfg.sigma_j, [](model::ErrorRealization& e, double x) { e.delta_j += x; }});
  }
  return dims;
}

std::vector<model::ErrorRealization> tensor_product(const std::vector<Dimension>& dims,
                                                    const QuadratureRule& rule,
                                                    const model::ErrorRealization& base) {
  std::vector<model::ErrorRealization> out{base};
  for (const auto& d : dims) {
    std::vector<model::ErrorRealization> next;
    next.reserve(out.size() * rule.nodes.size());
    for (const auto& r : out) {
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        model::ErrorRealization e = r;
        d.set(e, d.sigma * rule.nodes[i]);
        e.weight = r.weight * rule.weights[i];
        next.push_back(e);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::gauss_hermite:
      return "gauss_hermite";
    case Method::monte_carlo:
      return "monte_carlo";
    case Method::grid:
      return "grid";
  }
  return "unknown";
}

Method method_from_string(const std::string& text) {
  if (text == "gauss_hermite") return Method::gauss_hermite;
  if (text == "monte_carlo") return Method::monte_carlo;
  if (text == "grid") return Method::grid;
  throw ValidationError("unknown noise method '" + text + "'");
}

void NoiseAveragingConfig::validate() const {
  if (order < 3 || order > 21 || order % 2 == 0) {
    throw ValidationError("gauss_hermite order must be odd and in [3, 21]");
  }
  if (samples < 1) throw ValidationError("monte_carlo samples must be >= 1");
  if (points < 3 || points % 2 == 0) throw ValidationError("grid points must be odd and >= 3");
  if (!(sigma_delta >= 0.0) || !(sigma_j >= 0.0) || !std::isfinite(sigma_delta) || !std::isfinite(sigma_j)) {
    throw ValidationError("noise sigma must be finite and non-negative");
  }
}

QuadratureRule gauss_hermite_rule(int order) {
  if (order < 1) throw DomainError("gauss_hermite_rule: order must be positive");
  // Jacobi matrix of He_n: zero diagonal, off-diagonal √k.
  qalg::ComplexMatrix jacobi(static_cast<std::size_t>(order));
  for (int k = 1; k < order; ++k) {
    jacobi(k - 1, k) = std::sqrt(static_cast<double>(k));
    jacobi(k, k - 1) = std::sqrt(static_cast<double>(k));
  }
  const qalg::HermitianEig eig = qalg::eigh(jacobi);
  // Orthonormal p_k = He_k/√k!: returns p_n(x) and fills p_{n−1}(x), Σ_{k<n} p_k(x)².
  auto evaluate = [order](double x, double& prev, double& christoffel) {
    double pm = 0.0;
    double p = 1.0;
    christoffel = 0.0;
    for (int k = 0; k < order; ++k) {
      christoffel += p * p;
      const double next = (x * p - std::sqrt(static_cast<double>(k)) * pm) / std::sqrt(static_cast<double>(k + 1));
      pm = p;
      p = next;
    }
    prev = pm;
    return p;
  };
  QuadratureRule rule;
  double total = 0.0;
  for (int i = 0; i < order; ++i) {
    double x = eig.eigenvalues[i];
    double prev = 0.0;
    double christoffel = 0.0;
    for (int it = 0; it < 3; ++it) {
      const double p = evaluate(x, prev, christoffel);
      x -= p / (std::sqrt(static_cast<double>(order)) * prev);
    }
    evaluate(x, prev, christoffel);
    rule.nodes.push_back(x);
    rule.weights.push_back(1.0 / christoffel);
    total += rule.weights.back();
  }
  for (auto& w : rule.weights) w /= total;
  // The rule is symmetric; enforce it exactly so averages of odd functions vanish.
  for (int i = 0; i < order / 2; ++i) {
    const int j = order - 1 - i;
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

QuadratureRule uniform_grid_rule(int points) {
  if (points < 2) throw DomainError("uniform_grid_rule: need at least two points");
  QuadratureRule rule;
  double total = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = -kGridHalfWidth + 2.0 * kGridHalfWidth * i / (points - 1);
    rule.nodes.push_back(x);
    rule.weights.push_back(std::exp(-0.5 * x * x));
    total += rule.weights.back();
  }
  for (auto& w : rule.weights) w /= total;
  return rule;
}

std::vector<model::ErrorRealization> sample_noise(const NoiseAveragingConfig& cfg,
                                                  const model::ErrorRealization& base) {
  cfg.validate();
  const auto dims = active_dimensions(cfg);
  if (dims.empty()) return {base};

  switch (cfg.method) {
    case Method::gauss_hermite:
      return tensor_product(dims, gauss_hermite_rule(cfg.order), base);
    case Method::grid:
      return tensor_product(dims, uniform_grid_rule(cfg.points), base);
    case Method::monte_carlo: {
      std::mt19937_64 rng(cfg.seed);
      std::normal_distribution<double> normal(0.0, 1.0);
      std::vector<model::ErrorRealization> out;
      out.reserve(static_cast<std::size_t>(cfg.samples));
      for (int s = 0; s < cfg.samples; ++s) {
        model::ErrorRealization e = base;
        for (const auto& d : dims) d.set(e, d.sigma * normal(rng));
        e.weight = base.weight / cfg.samples;
        out.push_back(e);
      }
      return out;
    }
  }
  return {base};
}

double t2_star(double sigma) {
  if (!(sigma > 0.0)) throw DomainError("t2_star: sigma must be positive");
  return std::sqrt(2.0) / sigma;
}

}  // namespace riswap::noise
