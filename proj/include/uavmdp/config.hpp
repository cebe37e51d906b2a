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

#ifndef UAVMDP_CONFIG_HPP_
#define UAVMDP_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "uavmdp/experiments.hpp"
#include "uavmdp/mdp_model.hpp"

namespace uavmdp {

// Everything a run needs, as stored in the JSON config file. Keys match the
// member names. Units: seconds, bits, symbols/s, metres, watts, dBm/Hz, Hz.
// Any key may be omitted; unknown keys are rejected.
//
// The slot duration is flight_time_s / n_slots. The noise power is
// noise_power_w when set, otherwise the noise density integrated over
// noise_bandwidth_hz (which defaults to symbol_rate).
struct RunConfig {
  // Mission
  int n_slots = 10;
  double flight_time_s = 500.0;
  double data_bits = 30e6;
  double symbol_rate = 1.2e5;
  double height_step_m = 30.0;
  double height_max_m = 600.0;
  std::vector<int> mod_set = {1, 2};
  bool initial_blocked = false;

  // Channel
  double radius_m = 50.0;
  double alpha = 3.0;
  double beta0 = 1.0;
  double kappa = 1e-3;
  double a_env = 1.0;
  double b_env = 1.0;
  bool geometric_distance = false;

  // Link
  double ber_threshold = 1e-5;
  double noise_density_dbm_hz = -120.0;
  std::optional<double> noise_bandwidth_hz;
  std::optional<double> noise_power_w;

  // Run options
  std::uint64_t seed = 1;
  std::uint64_t rollouts = 100000;
  double fixed_height_min_m = 1.0;
  double fixed_height_max_m = 400.0;
  double fixed_height_step_m = 1.0;
  std::vector<double> u_values_m = {10, 20, 30, 40, 50};
  int modset_max_size = 8;
  double saturation_tol = 1e-6;
  int certify_instances = 200;
  std::string output_dir = "out";

  SystemParams system_params() const;
  HeightGrid fixed_height_grid() const;
  double noise_power() const;

  // Throws ConfigError naming the field and the violated constraint.
  void validate() const;

  bool operator==(const RunConfig&) const = default;
};

/// Parses JSON text. Blank text yields the defaults. The result is validated.
RunConfig parse_config(const std::string& text);

/// Reads and parses a config file. Throws ConfigError on any problem.
RunConfig load_config(const std::filesystem::path& path);

/// Pretty-printed JSON holding every field.
std::string dump_config(const RunConfig& config);

void save_config(const RunConfig& config, const std::filesystem::path& path);

/// Digest of the canonical compact JSON form of the config.
std::string config_digest(const RunConfig& config);

}  // namespace uavmdp

#endif  // UAVMDP_CONFIG_HPP_
