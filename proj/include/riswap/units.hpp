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

#include <numbers>

// Internal units are angular frequency (rad/s) and seconds. The helpers below
// convert the "/2π" frequencies used at the interfaces.
namespace riswap::units {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double khz(double f) { return kTwoPi * f * 1e3; }
constexpr double mhz(double f) { return kTwoPi * f * 1e6; }
constexpr double ghz(double f) { return kTwoPi * f * 1e9; }

constexpr double to_khz(double w) { return w / (kTwoPi * 1e3); }
constexpr double to_mhz(double w) { return w / (kTwoPi * 1e6); }
constexpr double to_ghz(double w) { return w / (kTwoPi * 1e9); }

constexpr double ps(double t) { return t * 1e-12; }
constexpr double ns(double t) { return t * 1e-9; }
constexpr double us(double t) { return t * 1e-6; }

constexpr double to_ps(double t) { return t * 1e12; }
constexpr double to_ns(double t) { return t * 1e9; }
constexpr double to_us(double t) { return t * 1e6; }

}  // namespace riswap::units
