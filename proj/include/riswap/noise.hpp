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

#include <cstdint>
#include <string>
#include <vector>

#include "riswap/model.hpp"

/// Quasi-static Gaussian noise: independent N(0, σ²) offsets on δ₁, δ₂ and,
/// optionally, δJ, expanded into weighted realizations.
namespace riswap::noise {

enum class Method { gauss_hermite, monte_carlo, grid };

std::string to_string(Method method);
Method method_from_string(const std::string& text);

struct NoiseAveragingConfig {
  Method method = Method::gauss_hermite;
  int order = 9;          // gauss_hermite: nodes per dimension, odd in [3, 21]
  int samples = 1000;     // monte_carlo
  std::uint64_t seed = 0;
  int points = 21;        // grid: nodes per dimension over ±4σ, odd
  double sigma_delta = 0.0;
  double sigma_j = 0.0;

  void validate() const;
  friend bool operator==(const NoiseAveragingConfig&, const NoiseAveragingConfig&) = default;
};

/// Nodes and weights integrating against the standard normal density.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;  // sum to 1
};

/// Gauss–Hermite rule for N(0, 1) (Golub–Welsch on the Jacobi matrix of the
/// probabilists' Hermite polynomials).
QuadratureRule gauss_hermite_rule(int order);

/// Equally spaced nodes over [−4, 4] weighted by the normal density.
QuadratureRule uniform_grid_rule(int points);

/// Tensor-product realizations on top of base (whose other fields are kept).
/// Dimensions with σ = 0 are omitted. Weights sum to base.weight.
std::vector<model::ErrorRealization> sample_noise(const NoiseAveragingConfig& cfg,
                                                  const model::ErrorRealization& base = {});

/// T₂* = √2/σ.
double t2_star(double sigma);

}  // namespace riswap::noise
