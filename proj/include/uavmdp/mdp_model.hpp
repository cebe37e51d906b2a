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

#ifndef UAVMDP_MDP_MODEL_HPP_
#define UAVMDP_MDP_MODEL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "uavmdp/channel_energy.hpp"

namespace uavmdp {

// Mission constants. Data is delivered in quanta of q = symbol_rate * tau
// bits: a slot using constellation size M carries log2(M) quanta.
struct SystemParams {
  int n_slots = 10;
  double data_bits = 30e6;
  double symbol_rate = 1.2e5;
  double height_step_m = 30.0;
  double height_max_m = 600.0;
  // Constellation sizes, ascending. 1 is muting, the rest powers of two.
  std::vector<int> mod_set = {1, 2};
  bool initial_blocked = false;
  ChannelParams channel;
  LinkParams link;

  double tau() const { return link.slot_duration_s; }
  double data_quantum_bits() const { return symbol_rate * link.slot_duration_s; }

  // D / q. Throws ConfigError when D is not an integer multiple of q.
  int data_quanta() const;
  int height_levels() const;
  int max_bits_per_slot() const;

  // Throws ConfigError naming the field and the violated constraint.
  void validate() const;

  bool operator==(const SystemParams&) const = default;
};

enum class HeightMove : int { kDescend = -1, kHold = 0, kAscend = 1 };

// Slot t in 1..N (N + 1 is the post-mission terminal stage). `level` indexes
// the height grid: height = level * u for level in 1..L, and level 0 is the
// landed terminal position. Data is counted in quanta.
struct MdpState {
  int slot = 1;
  int level = 1;
  int data = 0;
  bool blocked = false;

  bool operator==(const MdpState&) const = default;
};

struct MdpAction {
  HeightMove move = HeightMove::kHold;
  int mod_order = 1;

  bool operator==(const MdpAction&) const = default;
};

struct Transition {
  MdpState next;
  double probability = 0.0;
};

/// log2(M) quanta for constellation size M. Throws std::domain_error when M
/// is not in the modulation set.
int bits_per_slot(int mod_order, const SystemParams& params);

std::string to_string(const MdpState& state);
std::string to_string(const MdpAction& action);

// The finite-horizon decision process built from SystemParams.
//
// Two height regimes share the same state layout:
//  - joint: heights u, 2u, ..., H_max. Slot 1 starts at u, slot N must be at
//    u and its action is the landing descent to level 0.
//  - fixed height: a single level at an arbitrary altitude; only the hold
//    move exists and there is no takeoff or landing constraint.
//
// The reward of slot t is priced at the height and blockage of the state at
// the start of slot t. The move takes effect at t + 1, and the blockage of
// slot t + 1 is drawn from the LoS probability at the new height.
class MdpModel {
 public:
  static MdpModel joint(SystemParams params);
  static MdpModel fixed_height(SystemParams params, double height_m);

  const SystemParams& params() const { return params_; }
  bool is_fixed_height() const { return fixed_height_; }

  int horizon() const { return params_.n_slots; }
  int num_levels() const { return num_levels_; }
  int data_quanta() const { return data_quanta_; }
  double height_m(int level) const;
  double move_m(HeightMove move) const;

  MdpState initial_state() const;

  // True for stage-(N + 1) states that satisfy the terminal constraints:
  // all data delivered and, in the joint regime, landed.
  bool is_goal(const MdpState& state) const;

  int bits_per_slot(int mod_order) const;

  /// Energy spent in the state's slot. Throws InfeasibleActionError when the
  /// action breaks the height band, the landing rule or the data balance.
  double reward(const MdpState& state, const MdpAction& action) const;

  /// Next-state distribution. Height and data move deterministically; the
  /// blockage is resampled at the new height. Slot N leads to a single
  /// terminal state with probability 1.
  std::vector<Transition> successors(const MdpState& state,
                                     const MdpAction& action) const;

  /// Actions that keep the mission completable. Returned in tie-break order:
  /// ascending constellation size, then hold, descend, ascend.
  std::vector<MdpAction> feasible_actions(const MdpState& state) const;

  /// Whether `data` quanta can be delivered exactly within `slots` slots.
  bool deliverable(int slots, int data) const;

  /// Moves available at all in this regime, in tie-break order.
  const std::vector<HeightMove>& moves() const { return moves_; }

  // N * L * (D/q + 1) * 2.
  std::size_t state_count() const;
  std::vector<MdpState> states_at(int slot) const;

 private:
  MdpModel(SystemParams params, bool fixed_height, double fixed_height_m);

  void check_action(const MdpState& state, const MdpAction& action) const;

  SystemParams params_;
  bool fixed_height_ = false;
  double fixed_height_m_ = 0.0;
  int num_levels_ = 0;
  int data_quanta_ = 0;
  std::vector<HeightMove> moves_;
  // deliverable_[k * (D + 1) + d]: d quanta fit exactly in k slots.
  std::vector<char> deliverable_;
};

}  // namespace uavmdp

#endif  // UAVMDP_MDP_MODEL_HPP_
