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

#include "uavmdp/channel_energy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uavmdp {
namespace {

constexpr double kBerScale = 0.2;
constexpr double kBerExponent = 1.6;

void require(bool ok, const char* field, const char* constraint) {
  if (!ok) {
    throw std::invalid_argument(std::string(field) + ": must satisfy " +
                                constraint);
  }
}

}  // namespace

void ChannelParams::validate() const {
  require(std::isfinite(alpha) && alpha > 0, "alpha", "alpha > 0");
  require(std::isfinite(beta0) && beta0 > 0, "beta0", "beta0 > 0");
  require(kappa > 0 && kappa <= 1, "kappa", "0 < kappa <= 1");
  require(std::isfinite(a_env) && a_env > 0, "a_env", "a_env > 0");
  require(std::isfinite(b_env) && b_env > 0, "b_env", "b_env > 0");
  require(std::isfinite(radius_m) && radius_m > 0, "radius_m", "radius_m > 0");
}

void LinkParams::validate() const {
  require(std::isfinite(sigma2_w) && sigma2_w > 0, "sigma2_w", "sigma2_w > 0");
  require(ber_threshold > 0 && ber_threshold < kBerScale, "ber_threshold",
          "0 < ber_threshold < 0.2");
  require(std::isfinite(slot_duration_s) && slot_duration_s > 0,
          "slot_duration_s", "slot_duration_s > 0");
}

double elevation_angle(double height_m, const ChannelParams& params) {
  return std::atan(height_m / params.radius_m);
}

double los_probability(double height_m, const ChannelParams& params) {
  const double theta = elevation_angle(height_m, params);
  return 1.0 / (1.0 + params.a_env *
                          std::exp(-params.b_env * (theta - params.a_env)));
}

double squared_distance(double height_m, const ChannelParams& params) {
  if (params.geometric_distance) {
    return height_m * height_m + params.radius_m * params.radius_m;
  }
  return height_m + params.radius_m;
}

double path_loss(double height_m, bool blocked, const ChannelParams& params) {
  const double los_gain =
      params.beta0 *
      std::pow(squared_distance(height_m, params), -params.alpha / 2.0);
  return blocked ? params.kappa * los_gain : los_gain;
}

double approx_ber(int mod_order, double gain, double power_w, double sigma2_w) {
  if (mod_order <= 1) return 0.0;
  return kBerScale * std::exp(-kBerExponent * gain * power_w /
                              (sigma2_w * (mod_order - 1)));
}

double required_power(int mod_order, double gain, const LinkParams& link) {
  return slot_energy(mod_order, gain, link) / link.slot_duration_s;
}

double slot_energy(int mod_order, double gain, const LinkParams& link) {
  if (mod_order < 1) {
    throw std::invalid_argument("slot_energy: mod_order must be >= 1, got " +
                                std::to_string(mod_order));
  }
  if (!(gain > 0)) {
    throw std::domain_error("slot_energy: channel gain must be positive");
  }
  if (mod_order == 1) return 0.0;
  return link.sigma2_w * (mod_order - 1) * link.slot_duration_s *
         std::log(link.ber_threshold / kBerScale) / (-kBerExponent * gain);
}

double noise_power_from_density(double density_dbm_per_hz,
                                double bandwidth_hz) {
  if (!(bandwidth_hz > 0)) {
    throw std::invalid_argument("noise bandwidth must be positive");
  }
  return std::pow(10.0, (density_dbm_per_hz - 30.0) / 10.0) * bandwidth_hz;
}

}  // namespace uavmdp
