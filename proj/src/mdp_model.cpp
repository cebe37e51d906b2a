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

#include "uavmdp/mdp_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "uavmdp/errors.hpp"

namespace uavmdp {
namespace {

// Upper bound on D / q so that the dense tables stay allocatable.
constexpr long long kMaxDataQuanta = 1'000'000;
constexpr long long kMaxHeightLevels = 100'000;

// Returns n when value == n * unit up to rounding, otherwise -1.
long long integer_ratio(double value, double unit) {
  const double ratio = value / unit;
  if (!std::isfinite(ratio)) return -1;
  const long long n = std::llround(ratio);
  const double tol = 1e-9 * std::max(std::abs(value), std::abs(unit));
  if (std::abs(value - static_cast<double>(n) * unit) > tol) return -1;
  return n;
}

void require(bool ok, const std::string& field, const std::string& constraint) {
  if (!ok) throw ConfigError(field + ": must satisfy " + constraint);
}

}  // namespace

int SystemParams::data_quanta() const {
  const double q = data_quantum_bits();
  const long long n = integer_ratio(data_bits, q);
  if (n < 0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "data_bits: " << data_bits
        << " is not an integer multiple of the data quantum q = symbol_rate * "
           "tau = "
        << q << " bits";
    throw ConfigError(msg.str());
  }
  if (n > kMaxDataQuanta) {
    throw ConfigError("data_bits: D / q = " + std::to_string(n) +
                      " exceeds the supported " +
                      std::to_string(kMaxDataQuanta) + " quanta");
  }
  return static_cast<int>(n);
}

int SystemParams::height_levels() const {
  const long long n = integer_ratio(height_max_m, height_step_m);
  if (n < 1) {
    throw ConfigError(
        "height_max_m: must be a positive integer multiple of height_step_m");
  }
  if (n > kMaxHeightLevels) {
    throw ConfigError("height_max_m: too many height levels (" +
                      std::to_string(n) + ")");
  }
  return static_cast<int>(n);
}

int SystemParams::max_bits_per_slot() const {
  return std::countr_zero(static_cast<unsigned>(mod_set.back()));
}

void SystemParams::validate() const {
  require(n_slots >= 2, "n_slots", "n_slots >= 2");
  require(std::isfinite(symbol_rate) && symbol_rate > 0, "symbol_rate",
          "symbol_rate > 0");
  require(std::isfinite(data_bits) && data_bits >= 0, "data_bits",
          "data_bits >= 0");
  require(std::isfinite(height_step_m) && height_step_m > 0, "height_step_m",
          "height_step_m > 0");
  require(std::isfinite(height_max_m) && height_max_m >= height_step_m,
          "height_max_m", "height_step_m <= height_max_m");
  require(!mod_set.empty(), "mod_set", "non-empty");
  require(std::count(mod_set.begin(), mod_set.end(), 1) == 1, "mod_set",
          "contains 1 (muting) exactly once");
  require(std::is_sorted(mod_set.begin(), mod_set.end()) &&
              std::adjacent_find(mod_set.begin(), mod_set.end()) ==
                  mod_set.end(),
          "mod_set", "strictly ascending");
  for (int m : mod_set) {
    require(m >= 1 && std::has_single_bit(static_cast<unsigned>(m)), "mod_set",
            "entries other than 1 are powers of two (got " + std::to_string(m) +
                ")");
  }
  try {
    channel.validate();
    link.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  height_levels();
  data_quanta();
}

int bits_per_slot(int mod_order, const SystemParams& params) {
  if (std::find(params.mod_set.begin(), params.mod_set.end(), mod_order) ==
      params.mod_set.end()) {
    throw std::domain_error("constellation size " + std::to_string(mod_order) +
                            " is not in the modulation set");
  }
  return std::countr_zero(static_cast<unsigned>(mod_order));
}

std::string to_string(const MdpState& state) {
  std::ostringstream out;
  out << "(t=" << state.slot << ", level=" << state.level
      << ", data=" << state.data << ", " << (state.blocked ? "NLoS" : "LoS")
      << ")";
  return out.str();
}

std::string to_string(const MdpAction& action) {
  std::ostringstream out;
  out << "(move=" << static_cast<int>(action.move) << ", M=" << action.mod_order
      << ")";
  return out.str();
}

MdpModel::MdpModel(SystemParams params, bool fixed_height,
                   double fixed_height_m)
    : params_(std::move(params)),
      fixed_height_(fixed_height),
      fixed_height_m_(fixed_height_m) {
  params_.validate();
  num_levels_ = fixed_height_ ? 1 : params_.height_levels();
  data_quanta_ = params_.data_quanta();
  if (fixed_height_) {
    moves_ = {HeightMove::kHold};
  } else {
    moves_ = {HeightMove::kHold, HeightMove::kDescend, HeightMove::kAscend};
  }

  const int n = params_.n_slots;
  const int d_max = data_quanta_;
  deliverable_.assign(static_cast<std::size_t>(n + 1) * (d_max + 1), 0);
  deliverable_[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int d = 0; d <= d_max; ++d) {
      char ok = 0;
      for (int m : params_.mod_set) {
        const int bits = std::countr_zero(static_cast<unsigned>(m));
        if (bits <= d &&
            deliverable_[static_cast<std::size_t>(k - 1) * (d_max + 1) + d -
                         bits]) {
          ok = 1;
          break;
        }
      }
      deliverable_[static_cast<std::size_t>(k) * (d_max + 1) + d] = ok;
    }
  }
}

MdpModel MdpModel::joint(SystemParams params) {
  return MdpModel(std::move(params), false, 0.0);
}

MdpModel MdpModel::fixed_height(SystemParams params, double height_m) {
  if (!(std::isfinite(height_m) && height_m > 0)) {
    throw ConfigError("fixed height: must satisfy height > 0");
  }
  return MdpModel(std::move(params), true, height_m);
}

double MdpModel::height_m(int level) const {
  if (fixed_height_) return fixed_height_m_;
  return level * params_.height_step_m;
}

double MdpModel::move_m(HeightMove move) const {
  return static_cast<int>(move) * params_.height_step_m;
}

MdpState MdpModel::initial_state() const {
  return MdpState{1, 1, data_quanta_, params_.initial_blocked};
}

bool MdpModel::is_goal(const MdpState& state) const {
  if (state.slot != horizon() + 1 || state.data != 0) return false;
  return fixed_height_ || state.level == 0;
}

int MdpModel::bits_per_slot(int mod_order) const {
  return uavmdp::bits_per_slot(mod_order, params_);
}

bool MdpModel::deliverable(int slots, int data) const {
  if (slots < 0 || data < 0 || data > data_quanta_) return false;
  if (slots > params_.n_slots) slots = params_.n_slots;
  return deliverable_[static_cast<std::size_t>(slots) * (data_quanta_ + 1) +
                      data] != 0;
}

void MdpModel::check_action(const MdpState& state,
                            const MdpAction& action) const {
  const int n = horizon();
  if (state.slot < 1 || state.slot > n || state.level < 1 ||
      state.level > num_levels_ || state.data < 0 ||
      state.data > data_quanta_) {
    throw std::invalid_argument("invalid state " + to_string(state));
  }
  if (std::find(moves_.begin(), moves_.end(), action.move) == moves_.end()) {
    throw InfeasibleActionError("height move not available at fixed height");
  }
  const int bits = bits_per_slot(action.mod_order);
  if (bits > state.data) {
    throw InfeasibleActionError("action " + to_string(action) + " at " +
                                to_string(state) +
                                " would leave negative data");
  }
  if (state.slot == n && !fixed_height_) {
    if (state.level != 1 || action.move != HeightMove::kDescend) {
      throw InfeasibleActionError(
          "slot N must start at height u and descend to land; got " +
          to_string(action) + " at " + to_string(state));
    }
    return;
  }
  const int next_level = state.level + static_cast<int>(action.move);
  if (next_level < 1 || next_level > num_levels_) {
    throw InfeasibleActionError("action " + to_string(action) + " at " +
                                to_string(state) +
                                " leaves the height band [u, H_max]");
  }
}

double MdpModel::reward(const MdpState& state, const MdpAction& action) const {
  check_action(state, action);
  const double gain =
      path_loss(height_m(state.level), state.blocked, params_.channel);
  return slot_energy(action.mod_order, gain, params_.link);
}

std::vector<Transition> MdpModel::successors(const MdpState& state,
                                             const MdpAction& action) const {
  check_action(state, action);
  const int next_data = state.data - bits_per_slot(action.mod_order);
  if (state.slot == horizon()) {
    const int landed = fixed_height_ ? 1 : 0;
    return {Transition{MdpState{state.slot + 1, landed, next_data, false}, 1.0}};
  }
  const int next_level = state.level + static_cast<int>(action.move);
  const double p_los = los_probability(height_m(next_level), params_.channel);
  std::vector<Transition> out;
  out.reserve(2);
  if (p_los > 0.0) {
    out.push_back({MdpState{state.slot + 1, next_level, next_data, false}, p_los});
  }
  if (p_los < 1.0) {
    out.push_back(
        {MdpState{state.slot + 1, next_level, next_data, true}, 1.0 - p_los});
  }
  return out;
}

std::vector<MdpAction> MdpModel::feasible_actions(const MdpState& state) const {
  const int n = horizon();
  if (state.slot < 1 || state.slot > n || state.level < 1 ||
      state.level > num_levels_ || state.data < 0 ||
      state.data > data_quanta_) {
    throw std::invalid_argument("invalid state " + to_string(state));
  }
  std::vector<MdpAction> out;
  for (int m : params_.mod_set) {
    const int bits = bits_per_slot(m);
    if (bits > state.data) break;
    for (HeightMove move : moves_) {
      if (state.slot == n) {
        const HeightMove landing =
            fixed_height_ ? HeightMove::kHold : HeightMove::kDescend;
        if (move == landing && bits == state.data &&
            (fixed_height_ || state.level == 1)) {
          out.push_back({move, m});
        }
        continue;
      }
      const int next_level = state.level + static_cast<int>(move);
      if (next_level < 1 || next_level > num_levels_) continue;
      // Slots t+1..N remain for data; moves t+1..N-1 remain to reach u.
      const int slots_left = n - state.slot;
      if (!deliverable(slots_left, state.data - bits)) continue;
      if (!fixed_height_ && next_level - 1 > slots_left - 1) continue;
      out.push_back({move, m});
    }
  }
  return out;
}

std::size_t MdpModel::state_count() const {
  return static_cast<std::size_t>(horizon()) * num_levels_ *
         (data_quanta_ + 1) * 2;
}

std::vector<MdpState> MdpModel::states_at(int slot) const {
  std::vector<MdpState> out;
  out.reserve(static_cast<std::size_t>(num_levels_) * (data_quanta_ + 1) * 2);
  for (int level = 1; level <= num_levels_; ++level) {
    for (int data = 0; data <= data_quanta_; ++data) {
      out.push_back({slot, level, data, false});
      out.push_back({slot, level, data, true});
    }
  }
  return out;
}

}  // namespace uavmdp
