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

#include "uavmdp/tables.hpp"

#include <limits>
#include <stdexcept>

#include "uavmdp/errors.hpp"

namespace uavmdp {

StateIndex::StateIndex(int horizon, int num_levels, int data_quanta)
    : horizon_(horizon),
      num_levels_(num_levels),
      data_quanta_(data_quanta),
      size_(static_cast<std::size_t>(horizon + 1) * (num_levels + 1) *
            (data_quanta + 1) * 2) {}

bool StateIndex::contains(const MdpState& state) const {
  return state.slot >= 1 && state.slot <= horizon_ + 1 && state.level >= 0 &&
         state.level <= num_levels_ && state.data >= 0 &&
         state.data <= data_quanta_;
}

std::size_t StateIndex::operator()(const MdpState& state) const {
  if (!contains(state)) {
    throw std::out_of_range("state outside table: " + to_string(state));
  }
  std::size_t i = static_cast<std::size_t>(state.slot - 1);
  i = i * (num_levels_ + 1) + state.level;
  i = i * (data_quanta_ + 1) + state.data;
  return i * 2 + (state.blocked ? 1 : 0);
}

ValueTable::ValueTable(const MdpModel& model)
    : index_(model.horizon(), model.num_levels(), model.data_quanta()),
      values_(index_.size(), std::numeric_limits<double>::infinity()) {}

PolicyTable::PolicyTable(const MdpModel& model)
    : index_(model.horizon(), model.num_levels(), model.data_quanta()),
      actions_(index_.size()) {}

std::optional<MdpAction> PolicyTable::find(const MdpState& state) const {
  if (!index_.contains(state)) return std::nullopt;
  return actions_[index_(state)];
}

MdpAction PolicyTable::at(const MdpState& state) const {
  auto action = find(state);
  if (!action) {
    throw PolicyCoverageError("policy has no action for state " +
                              to_string(state));
  }
  return *action;
}

void PolicyTable::set(const MdpState& state, const MdpAction& action) {
  auto& slot = actions_[index_(state)];
  if (!slot) ++entries_;
  slot = action;
}

}  // namespace uavmdp
