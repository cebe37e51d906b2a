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

#ifndef UAVMDP_TESTS_TEST_SUPPORT_HPP_
#define UAVMDP_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cmath>

#include "uavmdp/mdp_model.hpp"

namespace uavmdp::testing {

inline bool rel_close(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 || std::abs(a - b) <= tol * scale;
}

// Mission defaults: N = 10, tau = 50 s, D = 30 Mbit = 5 quanta of 6 Mbit,
// u = 30 m, R = 50 m, sigma2 = -120 dBm/Hz over 1.2e5 Hz, {Muting, BPSK}.
inline SystemParams default_params() { return SystemParams{}; }

// Energy of one BPSK slot in LoS at 30 m under the defaults; frozen from an
// independent evaluation of the energy formula.
inline constexpr double kBpskLos30 = 2.6573845658152558e-05;

}  // namespace uavmdp::testing

#endif  // UAVMDP_TESTS_TEST_SUPPORT_HPP_
