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

#ifndef UAVMDP_SOLVER_HPP_
#define UAVMDP_SOLVER_HPP_

#include <iosfwd>
#include <vector>

#include "uavmdp/mdp_model.hpp"
#include "uavmdp/tables.hpp"

namespace uavmdp {

struct Solution {
  ValueTable values;
  PolicyTable policy;
};

// Backward induction over slots N, N-1, ..., 1.
//
// Stage N + 1 is worth 0 on the goal set and +infinity elsewhere. Each
// earlier state takes the minimum over its feasible actions of the slot
// energy plus the expected stage-(t + 1) value. Infinite successor values
// with positive probability make the action infinite. Ties keep the first
// action in feasible_actions order (smaller M, then hold, descend, ascend).
//
// Values are computed for every state of every stage, including both
// blockage states at slot 1. Only finite-valued states get a policy entry.
Solution backward_induction(const MdpModel& model);

// backward_induction, then throws InfeasibleInstanceError naming the binding
// constraint when the initial state has infinite value.
Solution solve(const MdpModel& model);

/// Slot energy plus expected next-stage value for one action.
double action_value(const MdpModel& model, const ValueTable& next_values,
                    const MdpState& state, const MdpAction& action);

/// V_1 at the model's initial state. Throws InfeasibleInstanceError if it is
/// infinite.
double value_of_initial_state(const ValueTable& values, const MdpModel& model);

// One row of the per-slot lookup table.
struct LookupRow {
  int slot = 0;
  int data_quanta = 0;
  double data_bits = 0.0;
  double height_m = 0.0;
  bool blocked = false;
  double move_m = 0.0;
  int mod_order = 1;
  double value_j = 0.0;
};

/// Every state of `slot` that has a policy entry, with its action and value.
std::vector<LookupRow> export_lookup_table(const Solution& solution,
                                           const MdpModel& model, int slot);

// Header: t,data_quanta,data_bits,height_m,blocked,move_m,mod_order,value_j
void write_lookup_csv(std::ostream& out, const std::vector<LookupRow>& rows,
                      bool with_header = true);

}  // namespace uavmdp

#endif  // UAVMDP_SOLVER_HPP_
