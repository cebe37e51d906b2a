// Copyright 2026 The uavmdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uavmdp/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"
#include "uavmdp/csv_output.hpp"
#include "uavmdp/errors.hpp"

namespace uavmdp {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError(field + ": " + what);
}

void require(bool ok, const std::string& field, const std::string& constraint) {
  if (!ok) fail(field, "must satisfy " + constraint);
}

double as_double(const json& v, const std::string& key) {
  if (!v.is_number()) fail(key, "expected a number");
  return v.get<double>();
}

long long as_integer(const json& v, const std::string& key) {
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < 9e15) {
      return static_cast<long long>(d);
    }
  }
  fail(key, "expected an integer");
}

bool as_bool(const json& v, const std::string& key) {
  if (!v.is_boolean()) fail(key, "expected true or false");
  return v.get<bool>();
}

std::optional<double> as_optional_double(const json& v, const std::string& key) {
  if (v.is_null()) return std::nullopt;
  return as_double(v, key);
}

template <typename T, typename Conv>
std::vector<T> as_array(const json& v, const std::string& key, Conv conv) {
  if (!v.is_array()) fail(key, "expected an array");
  std::vector<T> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(static_cast<T>(conv(v[i], key + "[" + std::to_string(i) + "]")));
  }
  return out;
}

using Reader = std::function<void(RunConfig&, const json&, const std::string&)>;

const std::map<std::string, Reader>& readers() {
  static const std::map<std::string, Reader> table = {
      {"n_slots", [](RunConfig& c, const json& v, const std::string& k) {
         c.n_slots = static_cast<int>(as_integer(v, k));
       }},
      {"flight_time_s", [](RunConfig& c, const json& v, const std::string& k) {
         c.flight_time_s = as_double(v, k);
       }},
      {"data_bits", [](RunConfig& c, const json& v, const std::string& k) {
         c.data_bits = as_double(v, k);
       }},
      {"symbol_rate", [](RunConfig& c, const json& v, const std::string& k) {
         c.symbol_rate = as_double(v, k);
       }},
      {"height_step_m", [](RunConfig& c, const json& v, const std::string& k) {
         c.height_step_m = as_double(v, k);
       }},
      {"height_max_m", [](RunConfig& c, const json& v, const std::string& k) {
         c.height_max_m = as_double(v, k);
       }},
      {"mod_set", [](RunConfig& c, const json& v, const std::string& k) {
         c.mod_set = as_array<int>(v, k, as_integer);
       }},
      {"initial_blocked", [](RunConfig& c, const json& v, const std::string& k) {
         c.initial_blocked = as_bool(v, k);
       }},
      {"radius_m", [](RunConfig& c, const json& v, const std::string& k) {
         c.radius_m = as_double(v, k);
       }},
      {"alpha", [](RunConfig& c, const json& v, const std::string& k) {
         c.alpha = as_double(v, k);
       }},
      {"beta0", [](RunConfig& c, const json& v, const std::string& k) {
         c.beta0 = as_double(v, k);
       }},
      {"kappa", [](RunConfig& c, const json& v, const std::string& k) {
         c.kappa = as_double(v, k);
       }},
      {"a_env", [](RunConfig& c, const json& v, const std::string& k) {
         c.a_env = as_double(v, k);
       }},
      {"b_env", [](RunConfig& c, const json& v, const std::string& k) {
         c.b_env = as_double(v, k);
       }},
      {"geometric_distance",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.geometric_distance = as_bool(v, k);
       }},
      {"ber_threshold", [](RunConfig& c, const json& v, const std::string& k) {
         c.ber_threshold = as_double(v, k);
       }},
      {"noise_density_dbm_hz",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.noise_density_dbm_hz = as_double(v, k);
       }},
      {"noise_bandwidth_hz",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.noise_bandwidth_hz = as_optional_double(v, k);
       }},
      {"noise_power_w", [](RunConfig& c, const json& v, const std::string& k) {
         c.noise_power_w = as_optional_double(v, k);
       }},
      {"seed", [](RunConfig& c, const json& v, const std::string& k) {
         if (!v.is_number_unsigned()) fail(k, "expected a non-negative integer");
         c.seed = v.get<std::uint64_t>();
       }},
      {"rollouts", [](RunConfig& c, const json& v, const std::string& k) {
         if (!v.is_number_unsigned()) fail(k, "expected a non-negative integer");
         c.rollouts = v.get<std::uint64_t>();
       }},
      {"fixed_height_min_m",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.fixed_height_min_m = as_double(v, k);
       }},
      {"fixed_height_max_m",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.fixed_height_max_m = as_double(v, k);
       }},
      {"fixed_height_step_m",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.fixed_height_step_m = as_double(v, k);
       }},
      {"u_values_m", [](RunConfig& c, const json& v, const std::string& k) {
         c.u_values_m = as_array<double>(v, k, as_double);
       }},
      {"modset_max_size", [](RunConfig& c, const json& v, const std::string& k) {
         c.modset_max_size = static_cast<int>(as_integer(v, k));
       }},
      {"saturation_tol", [](RunConfig& c, const json& v, const std::string& k) {
         c.saturation_tol = as_double(v, k);
       }},
      {"certify_instances",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.certify_instances = static_cast<int>(as_integer(v, k));
       }},
      {"output_dir", [](RunConfig& c, const json& v, const std::string& k) {
         if (!v.is_string()) fail(k, "expected a string");
         c.output_dir = v.get<std::string>();
       }},
  };
  return table;
}

json to_json(const RunConfig& c) {
  json j;
  j["n_slots"] = c.n_slots;
  j["flight_time_s"] = c.flight_time_s;
  j["data_bits"] = c.data_bits;
  j["symbol_rate"] = c.symbol_rate;
  j["height_step_m"] = c.height_step_m;
  j["height_max_m"] = c.height_max_m;
  j["mod_set"] = c.mod_set;
  j["initial_blocked"] = c.initial_blocked;
  j["radius_m"] = c.radius_m;
  j["alpha"] = c.alpha;
  j["beta0"] = c.beta0;
  j["kappa"] = c.kappa;
  j["a_env"] = c.a_env;
  j["b_env"] = c.b_env;
  j["geometric_distance"] = c.geometric_distance;
  j["ber_threshold"] = c.ber_threshold;
  j["noise_density_dbm_hz"] = c.noise_density_dbm_hz;
  j["noise_bandwidth_hz"] =
      c.noise_bandwidth_hz ? json(*c.noise_bandwidth_hz) : json(nullptr);
  j["noise_power_w"] = c.noise_power_w ? json(*c.noise_power_w) : json(nullptr);
  j["seed"] = c.seed;
  j["rollouts"] = c.rollouts;
  j["fixed_height_min_m"] = c.fixed_height_min_m;
  j["fixed_height_max_m"] = c.fixed_height_max_m;
  j["fixed_height_step_m"] = c.fixed_height_step_m;
  j["u_values_m"] = c.u_values_m;
  j["modset_max_size"] = c.modset_max_size;
  j["saturation_tol"] = c.saturation_tol;
  j["certify_instances"] = c.certify_instances;
  j["output_dir"] = c.output_dir;
  return j;
}

}  // namespace

double RunConfig::noise_power() const {
  if (noise_power_w) return *noise_power_w;
  return noise_power_from_density(noise_density_dbm_hz,
                                  noise_bandwidth_hz.value_or(symbol_rate));
}

SystemParams RunConfig::system_params() const {
  SystemParams p;
  p.n_slots = n_slots;
  p.data_bits = data_bits;
  p.symbol_rate = symbol_rate;
  p.height_step_m = height_step_m;
  p.height_max_m = height_max_m;
  p.mod_set = mod_set;
  p.initial_blocked = initial_blocked;
  p.channel.alpha = alpha;
  p.channel.beta0 = beta0;
  p.channel.kappa = kappa;
  p.channel.a_env = a_env;
  p.channel.b_env = b_env;
  p.channel.radius_m = radius_m;
  p.channel.geometric_distance = geometric_distance;
  p.link.ber_threshold = ber_threshold;
  p.link.slot_duration_s = flight_time_s / n_slots;
  p.link.sigma2_w = noise_power();
  return p;
}

HeightGrid RunConfig::fixed_height_grid() const {
  return HeightGrid{fixed_height_min_m, fixed_height_max_m, fixed_height_step_m};
}

void RunConfig::validate() const {
  require(n_slots >= 2, "n_slots", "n_slots >= 2");
  require(std::isfinite(flight_time_s) && flight_time_s > 0, "flight_time_s",
          "flight_time_s > 0");
  require(std::isfinite(noise_density_dbm_hz), "noise_density_dbm_hz",
          "a finite value");
  if (noise_bandwidth_hz) {
    require(std::isfinite(*noise_bandwidth_hz) && *noise_bandwidth_hz > 0,
            "noise_bandwidth_hz", "noise_bandwidth_hz > 0");
  }
  if (noise_power_w) {
    require(std::isfinite(*noise_power_w) && *noise_power_w > 0,
            "noise_power_w", "noise_power_w > 0");
  }
  require(std::isfinite(symbol_rate) && symbol_rate > 0, "symbol_rate",
          "symbol_rate > 0");
  system_params().validate();

  require(rollouts >= 1, "rollouts", "rollouts >= 1");
  require(fixed_height_min_m > 0, "fixed_height_min_m", "fixed_height_min_m > 0");
  require(fixed_height_max_m >= fixed_height_min_m, "fixed_height_max_m",
          "fixed_height_min_m <= fixed_height_max_m");
  require(fixed_height_step_m > 0, "fixed_height_step_m",
          "fixed_height_step_m > 0");
  for (std::size_t i = 0; i < u_values_m.size(); ++i) {
    const double u = u_values_m[i];
    const std::string key = "u_values_m[" + std::to_string(i) + "]";
    require(std::isfinite(u) && u > 0, key, "u > 0");
    const double ratio = height_max_m / u;
    require(std::abs(ratio - std::round(ratio)) <= 1e-9 * ratio, key,
            "u divides height_max_m");
  }
  require(modset_max_size >= 2 && modset_max_size <= 30, "modset_max_size",
          "2 <= modset_max_size <= 30");
  require(saturation_tol > 0, "saturation_tol", "saturation_tol > 0");
  require(certify_instances >= 1, "certify_instances", "certify_instances >= 1");
}

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    config.validate();
    return config;
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");

  const auto& table = readers();
  for (const auto& [key, value] : doc.items()) {
    auto it = table.find(key);
    if (it == table.end()) fail(key, "unknown key");
    it->second(config, value, key);
  }
  config.validate();
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string dump_config(const RunConfig& config) {
  return to_json(config).dump(2) + "\n";
}

void save_config(const RunConfig& config, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_config(config);
}

std::string config_digest(const RunConfig& config) {
  return fnv1a_hex(to_json(config).dump());
}

}  // namespace uavmdp
