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

#include "riswap/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "riswap/units.hpp"

namespace riswap::config {

namespace {

const std::set<std::string> kSections = {"system", "noise", "integrator", "sweep", "output"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double to_double(const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) {
    throw std::invalid_argument("malformed number '" + t + "'");
  }
  return v;
}

long long to_integer(const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE) {
    throw std::invalid_argument("malformed integer '" + t + "'");
  }
  return v;
}

int to_int(const std::string& text) {
  const long long v = to_integer(text);
  if (v < -2147483647LL || v > 2147483647LL) throw std::invalid_argument("integer out of range");
  return static_cast<int>(v);
}

std::uint64_t to_u64(const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  errno = 0;
  if (!t.empty() && t[0] == '-') throw std::invalid_argument("seed must be non-negative");
  const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE) {
    throw std::invalid_argument("malformed integer '" + t + "'");
  }
  return v;
}

bool to_bool(const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "yes" || t == "on" || t == "1") return true;
  if (t == "false" || t == "no" || t == "off" || t == "0") return false;
  throw std::invalid_argument("malformed boolean '" + t + "'");
}

std::vector<std::string> to_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("empty list item");
    out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::string from_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

experiments::Axis to_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ':')) parts.push_back(trim(item));
  if (parts.size() != 4) throw std::invalid_argument("axis must be name:min:max:points");
  if (!experiments::is_axis_name(parts[0])) throw std::invalid_argument("unknown axis '" + parts[0] + "'");
  return {parts[0], to_double(parts[1]), to_double(parts[2]), to_int(parts[3])};
}

std::string from_axis(const experiments::Axis& a) {
  return a.name + ":" + fmt(a.min) + ":" + fmt(a.max) + ":" + std::to_string(a.points);
}

std::string to_word(const std::string& text, const std::set<std::string>& allowed) {
  const std::string t = trim(text);
  if (!allowed.count(t)) throw std::invalid_argument("unexpected value '" + t + "'");
  return t;
}

struct Field {
  std::function<void(RunConfig&, const std::string&)> set;
  std::function<std::optional<std::string>(const RunConfig&)> get;
};

template <class T>
Field optional_field(std::optional<T> RunConfig::*member, std::function<T(const std::string&)> parse,
                     std::function<std::string(const T&)> print) {
  return {[=](RunConfig& c, const std::string& v) { c.*member = parse(v); },
          [=](const RunConfig& c) -> std::optional<std::string> {
            if (!(c.*member)) return std::nullopt;
            return print(*(c.*member));
          }};
}

Field double_field(double RunConfig::*member) {
  return {[=](RunConfig& c, const std::string& v) { c.*member = to_double(v); },
          [=](const RunConfig& c) -> std::optional<std::string> { return fmt(c.*member); }};
}

Field opt_double(std::optional<double> RunConfig::*m) {
  return optional_field<double>(m, to_double, [](const double& v) { return fmt(v); });
}
Field opt_int(std::optional<int> RunConfig::*m) {
  return optional_field<int>(m, to_int, [](const int& v) { return std::to_string(v); });
}
Field opt_bool(std::optional<bool> RunConfig::*m) {
  return optional_field<bool>(m, to_bool, [](const bool& v) { return std::string(v ? "true" : "false"); });
}
Field opt_word(std::optional<std::string> RunConfig::*m, std::set<std::string> allowed) {
  return optional_field<std::string>(
      m, [allowed](const std::string& v) { return to_word(v, allowed); }, [](const std::string& v) { return v; });
}

// Ordered so that serialize() output is stable and readable.
const std::vector<std::pair<std::string, Field>>& fields() {
  static const std::vector<std::pair<std::string, Field>> table = [] {
    std::vector<std::pair<std::string, Field>> t;
    t.emplace_back("system.e_avg_ghz", double_field(&RunConfig::e_avg_ghz));
    t.emplace_back("system.delta_ez_ghz", double_field(&RunConfig::delta_ez_ghz));
    t.emplace_back("system.j_max_mhz", double_field(&RunConfig::j_max_mhz));
    t.emplace_back("system.j0_khz", double_field(&RunConfig::j0_khz));
    t.emplace_back("system.lever_arm_per_volt", double_field(&RunConfig::lever_arm_per_volt));
    t.emplace_back("system.t2_echo_us", double_field(&RunConfig::t2_echo_us));
    t.emplace_back("system.exchange_off", opt_word(&RunConfig::exchange_off, {"residual", "zero"}));

    t.emplace_back("noise.method", opt_word(&RunConfig::method, {"gauss_hermite", "monte_carlo", "grid"}));
    t.emplace_back("noise.order", opt_int(&RunConfig::order));
    t.emplace_back("noise.samples", opt_int(&RunConfig::samples));
    t.emplace_back("noise.seed", optional_field<std::uint64_t>(&RunConfig::seed, to_u64, [](const std::uint64_t& v) {
                     return std::to_string(v);
                   }));
    t.emplace_back("noise.points", opt_int(&RunConfig::points));
    t.emplace_back("noise.sigma_delta_mhz", opt_double(&RunConfig::sigma_delta_mhz));
    t.emplace_back("noise.sigma_j_mhz", opt_double(&RunConfig::sigma_j_mhz));

    t.emplace_back("integrator.mode", opt_word(&RunConfig::mode, {"rwa", "full", "full_counter_rotating"}));
    t.emplace_back("integrator.step_ps", opt_double(&RunConfig::step_ps));
    t.emplace_back("integrator.substeps_per_fastest_period", opt_int(&RunConfig::substeps_per_fastest_period));

    t.emplace_back("sweep.experiment", optional_field<std::string>(
                                           &RunConfig::experiment, [](const std::string& v) { return trim(v); },
                                           [](const std::string& v) { return v; }));
    t.emplace_back("sweep.preset",
                   Field{[](RunConfig& c, const std::string& v) { c.preset = experiments::preset_from_string(trim(v)); },
                         [](const RunConfig& c) -> std::optional<std::string> {
                           return experiments::to_string(c.preset);
                         }});
    t.emplace_back("sweep.schemes", optional_field<std::vector<std::string>>(&RunConfig::schemes, to_list, from_list));
    t.emplace_back("sweep.scheme", Field{[](RunConfig& c, const std::string& v) { c.schemes = to_list(v); },
                                         [](const RunConfig&) -> std::optional<std::string> { return std::nullopt; }});
    t.emplace_back("sweep.axis1", optional_field<experiments::Axis>(&RunConfig::axis1, to_axis, from_axis));
    t.emplace_back("sweep.axis2", optional_field<experiments::Axis>(&RunConfig::axis2, to_axis, from_axis));
    t.emplace_back("sweep.decoherence", opt_bool(&RunConfig::decoherence));
    t.emplace_back("sweep.spot_check_full", opt_bool(&RunConfig::spot_check_full));
    t.emplace_back("sweep.amplitude_errors_on_local_z", opt_bool(&RunConfig::amplitude_errors_on_local_z));
    t.emplace_back("sweep.conventional_voltage_domain", opt_bool(&RunConfig::conventional_voltage_domain));
    t.emplace_back("sweep.omega_mhz", opt_double(&RunConfig::omega_mhz));
    t.emplace_back("sweep.n", opt_int(&RunConfig::n));
    t.emplace_back("sweep.workers", opt_int(&RunConfig::workers));
    t.emplace_back("sweep.delta1_mhz", opt_double(&RunConfig::delta1_mhz));
    t.emplace_back("sweep.delta2_mhz", opt_double(&RunConfig::delta2_mhz));
    t.emplace_back("sweep.delta_j_mhz", opt_double(&RunConfig::delta_j_mhz));
    t.emplace_back("sweep.eps1", opt_double(&RunConfig::eps1));
    t.emplace_back("sweep.eps2", opt_double(&RunConfig::eps2));
    t.emplace_back("sweep.eps_v", opt_double(&RunConfig::eps_v));
    t.emplace_back("sweep.dtau1", opt_double(&RunConfig::dtau1));
    t.emplace_back("sweep.dtau2", opt_double(&RunConfig::dtau2));

    t.emplace_back("output.path", optional_field<std::string>(
                                      &RunConfig::path, [](const std::string& v) { return trim(v); },
                                      [](const std::string& v) { return v; }));
    return t;
  }();
  return table;
}

const Field* find_field(const std::string& qualified) {
  for (const auto& [k, f] : fields()) {
    if (k == qualified) return &f;
  }
  return nullptr;
}

void assign(RunConfig& c, const std::string& qualified, const std::string& value, std::size_t line) {
  const Field* f = find_field(qualified);
  if (!f) throw ParseError(line, "unknown key '" + qualified + "'");
  try {
    f->set(c, value);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(line, qualified + ": " + e.what());
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : ValidationError(line ? "config line " + std::to_string(line) + ": " + message : "config: " + message),
      line_(line) {}

model::SystemParams RunConfig::system() const {
  model::SystemParams p;
  const double e_avg = units::ghz(e_avg_ghz);
  const double delta = units::ghz(delta_ez_ghz);
  p.bz1 = e_avg + 0.5 * delta;
  p.bz2 = e_avg - 0.5 * delta;
  p.j_max = units::mhz(j_max_mhz);
  p.t2_echo = units::us(t2_echo_us);
  p.exchange_model = {units::khz(j0_khz), lever_arm_per_volt};
  return p;
}

experiments::SweepSpec RunConfig::to_sweep() const {
  if (!experiment) throw ValidationError("no experiment selected (set sweep.experiment or --experiment)");
  if (!experiments::is_registered(*experiment)) {
    throw ValidationError("unknown experiment '" + *experiment + "'");
  }
  experiments::SweepSpec s = experiments::default_spec(*experiment, preset);
  s.system = system();
  if (exchange_off) s.exchange_off = *exchange_off == "zero" ? schemes::ExchangeOff::zero : schemes::ExchangeOff::residual;

  if (method) s.noise.method = noise::method_from_string(*method);
  if (order) s.noise.order = *order;
  if (samples) s.noise.samples = *samples;
  if (seed) s.noise.seed = *seed;
  if (points) s.noise.points = *points;
  if (sigma_delta_mhz) s.noise.sigma_delta = units::mhz(*sigma_delta_mhz);
  if (sigma_j_mhz) s.noise.sigma_j = units::mhz(*sigma_j_mhz);

  if (mode) s.integrator.mode = dynamics::mode_from_string(*mode);
  if (step_ps) s.integrator.step = units::ps(*step_ps);
  if (substeps_per_fastest_period) s.integrator.substeps_per_fastest_period = *substeps_per_fastest_period;

  if (schemes) s.schemes = *schemes;
  if (axis1) s.axes.at(0) = *axis1;
  if (axis2) {
    if (s.axes.size() > 1) {
      s.axes[1] = *axis2;
    } else {
      s.axes.push_back(*axis2);
    }
  }
  if (decoherence) s.decoherence = *decoherence;
  if (spot_check_full) s.spot_check_full = *spot_check_full;
  if (amplitude_errors_on_local_z) s.amplitude_errors_on_local_z = *amplitude_errors_on_local_z;
  if (conventional_voltage_domain) s.conventional_voltage_domain = *conventional_voltage_domain;
  if (omega_mhz) s.omega = units::mhz(*omega_mhz);
  if (n) s.direct_n = *n;
  if (workers) s.workers = *workers;
  if (delta1_mhz) s.fixed.delta1 = units::mhz(*delta1_mhz);
  if (delta2_mhz) s.fixed.delta2 = units::mhz(*delta2_mhz);
  if (delta_j_mhz) s.fixed.delta_j = units::mhz(*delta_j_mhz);
  if (eps1) s.fixed.eps1 = *eps1;
  if (eps2) s.fixed.eps2 = *eps2;
  if (eps_v) s.fixed.eps_v = *eps_v;
  if (dtau1) s.fixed.dtau1 = *dtau1;
  if (dtau2) s.fixed.dtau2 = *dtau2;
  s.validate();
  return s;
}

bool RunConfig::operator==(const RunConfig& o) const {
  // Every persisted field round-trips through serialize(); compare that way.
  for (const auto& [k, f] : fields()) {
    if (f.get(*this) != f.get(o)) return false;
  }
  return true;
}

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::size_t line_no = 0;
  std::map<std::string, std::size_t> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!kSections.count(section)) throw ParseError(line_no, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) throw ParseError(line_no, "key '" + key + "' outside any section");
    const std::string qualified = section + "." + key;
    if (auto it = seen.find(qualified); it != seen.end()) {
      c.warnings.push_back("config line " + std::to_string(line_no) + ": duplicate key '" + qualified +
                           "' (first set on line " + std::to_string(it->second) + "); last value wins");
    }
    seen[qualified] = line_no;
    assign(c, qualified, value, line_no);
  }
  return c;
}

std::string serialize(const RunConfig& config) {
  std::string out;
  std::string current;
  for (const auto& [k, f] : fields()) {
    const auto value = f.get(config);
    if (!value) continue;
    const std::string section = k.substr(0, k.find('.'));
    if (section != current) {
      if (!current.empty()) out += "\n";
      out += "[" + section + "]\n";
      current = section;
    }
    out += k.substr(k.find('.') + 1) + " = " + *value + "\n";
  }
  return out;
}

void apply_override(RunConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ParseError(0, "override must be section.key=value");
  const std::string key = trim(assignment.substr(0, eq));
  if (key.find('.') == std::string::npos) throw ParseError(0, "override key must be section.key");
  assign(config, key, assignment.substr(eq + 1), 0);
}

std::vector<std::string> known_keys() {
  std::vector<std::string> out;
  for (const auto& [k, f] : fields()) out.push_back(k);
  return out;
}

}  // namespace riswap::config
