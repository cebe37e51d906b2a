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

#ifndef UAVMDP_SIMULATOR_HPP_
#define UAVMDP_SIMULATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "uavmdp/mdp_model.hpp"
#include "uavmdp/tables.hpp"

namespace uavmdp {

// Seeding rule: a rollout with seed s draws from std::mt19937_64 seeded with
// splitmix64(s). Rollout i of an estimate started from seed s uses seed s + i.
// A uniform draw is (engine() >> 11) * 2^-53, and the slot is blocked when
// the draw is >= the LoS probability. Both engine and mapping are fixed by
// the standard, so traces are identical across platforms.
struct RngSeed {
  std::uint64_t value = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

struct TraceStep {
  int slot = 0;
  bool blocked = false;
  int mod_order = 1;
  double height_m = 0.0;
  double move_m = 0.0;
  double energy_j = 0.0;
  int quanta_sent = 0;
};

struct RolloutTrace {
  std::vector<TraceStep> steps;
  double total_energy_j = 0.0;
  double bits_delivered = 0.0;
  int final_data_quanta = 0;
  double final_height_m = 0.0;
};

/// Follows `policy` from the initial state, sampling blockage at each new
/// height. Throws PolicyCoverageError if a reached state has no entry.
RolloutTrace rollout(const PolicyTable& policy, const MdpModel& model,
                     RngSeed seed);

/// As rollout, but slot t's blockage is blockage[t - 1]. The first entry must
/// match the model's initial blockage. Throws std::invalid_argument on a
/// length or initial-state mismatch.
RolloutTrace rollout_with_blockage(const PolicyTable& policy,
                                   const MdpModel& model,
                                   const std::vector<bool>& blockage);

struct EnergyEstimate {
  double mean_j = 0.0;
  double std_error_j = 0.0;
  std::size_t rollouts = 0;
};

EnergyEstimate estimate_expected_energy(const PolicyTable& policy,
                                        const MdpModel& model,
                                        std::size_t n_rollouts, RngSeed seed);

// "Muting", "BPSK", then "<M>-QAM".
std::string modulation_name(int mod_order);

// Header: slot,blockage,modulation,height_m,move_m,energy_j,bits
void write_trace_csv(std::ostream& out, const RolloutTrace& trace,
                     double quantum_bits);

// Parses "No,Yes,..." / "0 1 ..." / "false,true" tokens separated by commas,
// whitespace or newlines. Lines starting with '#' are skipped.
std::vector<bool> parse_blockage_sequence(std::istream& in);

}  // namespace uavmdp

#endif  // UAVMDP_SIMULATOR_HPP_
