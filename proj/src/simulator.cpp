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

#include "uavmdp/simulator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>

#include "uavmdp/csv_output.hpp"

namespace uavmdp {
namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Runs one episode. `next_blocked(slot, p_los)` decides the blockage of
// `slot` given its LoS probability.
template <typename BlockageSource>
RolloutTrace run(const PolicyTable& policy, const MdpModel& model,
                 BlockageSource&& next_blocked) {
  RolloutTrace trace;
  trace.steps.reserve(model.horizon());
  MdpState state = model.initial_state();

  while (state.slot <= model.horizon()) {
    const MdpAction action = policy.at(state);
    const double energy = model.reward(state, action);
    const int sent = model.bits_per_slot(action.mod_order);
    trace.steps.push_back(TraceStep{state.slot, state.blocked,
                                    action.mod_order,
                                    model.height_m(state.level),
                                    model.move_m(action.move), energy, sent});
    trace.total_energy_j += energy;

    const auto transitions = model.successors(state, action);
    MdpState next = transitions.front().next;
    if (state.slot < model.horizon()) {
      double p_los = 0.0;
      for (const auto& tr : transitions) {
        if (!tr.next.blocked) p_los = tr.probability;
      }
      next.blocked = next_blocked(state.slot + 1, p_los);
    }
    state = next;
  }

  trace.final_data_quanta = state.data;
  trace.final_height_m = model.height_m(state.level);
  trace.bits_delivered = (model.data_quanta() - state.data) *
                         model.params().data_quantum_bits();
  return trace;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RolloutTrace rollout(const PolicyTable& policy, const MdpModel& model,
                     RngSeed seed) {
  std::mt19937_64 engine(splitmix64(seed.value));
  return run(policy, model, [&engine](int, double p_los) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    return u >= p_los;
  });
}

RolloutTrace rollout_with_blockage(const PolicyTable& policy,
                                   const MdpModel& model,
                                   const std::vector<bool>& blockage) {
  if (blockage.size() != static_cast<std::size_t>(model.horizon())) {
    throw std::invalid_argument(
        "blockage sequence has " + std::to_string(blockage.size()) +
        " entries, expected N = " + std::to_string(model.horizon()));
  }
  if (blockage.front() != model.initial_state().blocked) {
    throw std::invalid_argument(
        "blockage sequence must start with the initial blockage state");
  }
  return run(policy, model, [&blockage](int slot, double) {
    return blockage[static_cast<std::size_t>(slot - 1)];
  });
}

EnergyEstimate estimate_expected_energy(const PolicyTable& policy,
                                        const MdpModel& model,
                                        std::size_t n_rollouts, RngSeed seed) {
  if (n_rollouts == 0) {
    throw std::invalid_argument("estimate_expected_energy: n_rollouts >= 1");
  }
  std::vector<double> totals(n_rollouts);
  for (std::size_t i = 0; i < n_rollouts; ++i) {
    totals[i] =
        rollout(policy, model, RngSeed{seed.value + i}).total_energy_j;
  }

  CompensatedSum sum;
  for (double x : totals) sum.add(x);
  const double n = static_cast<double>(n_rollouts);
  const double mean = sum.value() / n;

  EnergyEstimate est;
  est.mean_j = mean;
  est.rollouts = n_rollouts;
  if (n_rollouts > 1) {
    CompensatedSum sq;
    for (double x : totals) sq.add((x - mean) * (x - mean));
    est.std_error_j = std::sqrt(sq.value() / (n - 1.0)) / std::sqrt(n);
  }
  return est;
}

std::string modulation_name(int mod_order) {
  if (mod_order == 1) return "Muting";
  if (mod_order == 2) return "BPSK";
  return std::to_string(mod_order) + "-QAM";
}

void write_trace_csv(std::ostream& out, const RolloutTrace& trace,
                     double quantum_bits) {
  out << "slot,blockage,modulation,height_m,move_m,energy_j,bits\n";
  for (const TraceStep& s : trace.steps) {
    out << s.slot << ',' << (s.blocked ? "Yes" : "No") << ','
        << modulation_name(s.mod_order) << ',' << format_number(s.height_m)
        << ',' << format_number(s.move_m) << ',' << format_number(s.energy_j)
        << ',' << format_number(s.quanta_sent * quantum_bits) << '\n';
  }
}

std::vector<bool> parse_blockage_sequence(std::istream& in) {
  std::vector<bool> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string token;
    auto flush = [&]() {
      if (token.empty()) return;
      std::string lower;
      for (char c : token) {
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      }
      if (lower == "yes" || lower == "1" || lower == "true" || lower == "nlos") {
        out.push_back(true);
      } else if (lower == "no" || lower == "0" || lower == "false" ||
                 lower == "los") {
        out.push_back(false);
      } else {
        throw std::invalid_argument("unrecognized blockage token '" + token +
                                    "'");
      }
      token.clear();
    };
    for (char c : line) {
      if (c == ',' || c == ';' || std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        token.push_back(c);
      }
    }
    flush();
  }
  return out;
}

}  // namespace uavmdp
