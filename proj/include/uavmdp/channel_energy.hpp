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

#ifndef UAVMDP_CHANNEL_ENERGY_HPP_
#define UAVMDP_CHANNEL_ENERGY_HPP_

namespace uavmdp {

// Air-to-ground link between a UAV circling at radius R and a ground sensor.
//
// The link is line-of-sight (LoS) or blocked (NLoS). The LoS probability
// follows an S-curve in the elevation angle, and the blocked link suffers an
// additional attenuation kappa on top of the distance-dependent path loss.
struct ChannelParams {
  double alpha = 3.0;     // path-loss exponent
  double beta0 = 1.0;     // LoS gain at 1 m
  double kappa = 1e-3;    // extra NLoS attenuation, 0 < kappa <= 1
  double a_env = 1.0;     // S-curve parameters of the urban environment
  double b_env = 1.0;
  double radius_m = 50.0; // hovering radius

  // When false the squared-distance surrogate is (H + R), as in the model
  // this library reproduces. When true it is the Euclidean H^2 + R^2.
  bool geometric_distance = false;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  bool operator==(const ChannelParams&) const = default;
};

struct LinkParams {
  double sigma2_w = 1.2e-10;      // receiver noise power
  double ber_threshold = 1e-5;    // must stay below 0.2
  double slot_duration_s = 50.0;  // tau

  void validate() const;

  bool operator==(const LinkParams&) const = default;
};

/// Elevation angle arctan(height / R) in radians.
double elevation_angle(double height_m, const ChannelParams& params);

/// 1 / (1 + a exp(-b (theta - a))). Strictly increasing in height.
double los_probability(double height_m, const ChannelParams& params);

/// Squared-distance term fed to the path-loss law; depends on the distance
/// mode of `params`.
double squared_distance(double height_m, const ChannelParams& params);

/// Channel power gain g = beta0 d^-alpha, times kappa when blocked.
double path_loss(double height_m, bool blocked, const ChannelParams& params);

/// Approximate M-QAM bit error rate 0.2 exp(-1.6 g p / (sigma2 (M - 1))).
/// `mod_order` is the constellation size; M = 1 (muting) returns 0.
double approx_ber(int mod_order, double gain, double power_w, double sigma2_w);

/// Transmit power that meets the BER threshold with equality.
double required_power(int mod_order, double gain, const LinkParams& link);

/// Energy of one slot, sigma2 (M - 1) tau ln(gamma / 0.2) / (-1.6 g).
/// Exactly zero for M = 1. Throws std::domain_error for gain <= 0 and
/// std::invalid_argument for mod_order < 1.
double slot_energy(int mod_order, double gain, const LinkParams& link);

/// Noise power over `bandwidth_hz` from a density given in dBm/Hz.
double noise_power_from_density(double density_dbm_per_hz, double bandwidth_hz);

}  // namespace uavmdp

#endif  // UAVMDP_CHANNEL_ENERGY_HPP_
