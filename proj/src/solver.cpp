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

#include "uavmdp/solver.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "uavmdp/csv_output.hpp"
#include "uavmdp/errors.hpp"

namespace uavmdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void init_terminal_stage(const MdpModel& model, ValueTable& values) {
  const int terminal = model.horizon() + 1;
  for (int level = 0; level <= model.num_levels(); ++level) {
    for (int data = 0; data <= model.data_quanta(); ++data) {
      for (bool blocked : {false, true}) {
        const MdpState s{terminal, level, data, blocked};
        values.set(s, model.is_goal(s) ? 0.0 : kInf);
      }
    }
  }
}

std::string infeasibility_reason(const MdpModel& model) {
  const auto& p = model.params();
  std::ostringstream msg;
  msg << "infeasible instance: ";
  if (!model.deliverable(model.horizon(), model.data_quanta())) {
    msg << "data volume constraint binds: D = " << model.data_quanta()
        << " quanta (" << p.data_bits << " bits) cannot be delivered exactly in "
        << model.horizon() << " slots with at most " << p.max_bits_per_slot()
        << " quanta per slot";
  } else {
    msg << "height constraint binds: no move sequence starts and ends at u = "
        << p.height_step_m << " m within " << model.horizon() << " slots";
  }
  return msg.str();
}

}  // namespace

double action_value(const MdpModel& model, const ValueTable& next_values,
                    const MdpState& state, const MdpAction& action) {
  double future = 0.0;
  for (const Transition& tr : model.successors(state, action)) {
    const double v = next_values.at(tr.next);
    if (std::isinf(v)) return kInf;
    future += tr.probability * v;
  }
  return model.reward(state, action) + future;
}

Solution backward_induction(const MdpModel& model) {
  Solution sol{ValueTable(model), PolicyTable(model)};
  init_terminal_stage(model, sol.values);

  for (int t = model.horizon(); t >= 1; --t) {
    for (const MdpState& s : model.states_at(t)) {
      double best = kInf;
      MdpAction best_action;
      for (const MdpAction& a : model.feasible_actions(s)) {
        const double q = action_value(model, sol.values, s, a);
        if (q < best) {
          best = q;
          best_action = a;
        }
      }
      sol.values.set(s, best);
      if (std::isfinite(best)) sol.policy.set(s, best_action);
    }
  }
  return sol;
}

Solution solve(const MdpModel& model) {
  Solution sol = backward_induction(model);
  if (std::isinf(sol.values.at(model.initial_state()))) {
    throw InfeasibleInstanceError(infeasibility_reason(model));
  }
  return sol;
}

double value_of_initial_state(const ValueTable& values, const MdpModel& model) {
  const double v = values.at(model.initial_state());
  if (std::isinf(v)) throw InfeasibleInstanceError(infeasibility_reason(model));
  return v;
}

std::vector<LookupRow> export_lookup_table(const Solution& solution,
                                           const MdpModel& model, int slot) {
  std::vector<LookupRow> rows;
  const double q = model.params().data_quantum_bits();
  for (const MdpState& s : model.states_at(slot)) {
    const auto action = solution.policy.find(s);
    if (!action) continue;
    rows.push_back(LookupRow{slot, s.data, s.data * q, model.height_m(s.level),
                             s.blocked, model.move_m(action->move),
                             action->mod_order, solution.values.at(s)});
  }
  return rows;
}

void write_lookup_csv(std::ostream& out, const std::vector<LookupRow>& rows,
                      bool with_header) {
  if (with_header) {
    out << "t,data_quanta,data_bits,height_m,blocked,move_m,mod_order,value_j\n";
  }
  for (const LookupRow& r : rows) {
    out << r.slot << ',' << r.data_quanta << ',' << format_number(r.data_bits)
        << ',' << format_number(r.height_m) << ',' << (r.blocked ? 1 : 0)
        << ',' << format_number(r.move_m) << ',' << r.mod_order << ','
        << format_number(r.value_j) << '\n';
  }
}

}  // namespace uavmdp
