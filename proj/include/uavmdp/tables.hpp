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

#ifndef UAVMDP_TABLES_HPP_
#define UAVMDP_TABLES_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "uavmdp/mdp_model.hpp"

namespace uavmdp {

// Dense index over (slot 1..N+1, level 0..L, data 0..D, blocked).
class StateIndex {
 public:
  StateIndex() = default;
  StateIndex(int horizon, int num_levels, int data_quanta);

  int horizon() const { return horizon_; }
  int num_levels() const { return num_levels_; }
  int data_quanta() const { return data_quanta_; }
  std::size_t size() const { return size_; }

  bool contains(const MdpState& state) const;
  // Throws std::out_of_range for states outside the grid.
  std::size_t operator()(const MdpState& state) const;

 private:
  int horizon_ = 0;
  int num_levels_ = 0;
  int data_quanta_ = 0;
  std::size_t size_ = 0;
};

// Expected energy-to-go per state. +infinity marks states from which the
// terminal constraints cannot be met.
class ValueTable {
 public:
  ValueTable() = default;
  explicit ValueTable(const MdpModel& model);

  int horizon() const { return index_.horizon(); }
  double at(const MdpState& state) const { return values_[index_(state)]; }
  void set(const MdpState& state, double value) {
    values_[index_(state)] = value;
  }

 private:
  StateIndex index_;
  std::vector<double> values_;
};

// Optimal action per feasible state and slot; the offline lookup table.
class PolicyTable {
 public:
  PolicyTable() = default;
  explicit PolicyTable(const MdpModel& model);

  int horizon() const { return index_.horizon(); }
  // Empty when the state has no entry (infeasible or never stored).
  std::optional<MdpAction> find(const MdpState& state) const;
  // Throws PolicyCoverageError when the state has no entry.
  MdpAction at(const MdpState& state) const;
  void set(const MdpState& state, const MdpAction& action);
  std::size_t entry_count() const { return entries_; }

 private:
  StateIndex index_;
  std::vector<std::optional<MdpAction>> actions_;
  std::size_t entries_ = 0;
};

}  // namespace uavmdp

#endif  // UAVMDP_TABLES_HPP_
