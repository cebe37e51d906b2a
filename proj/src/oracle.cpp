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

#include "uavmdp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <tuple>

#include "uavmdp/csv_output.hpp"
#include "uavmdp/errors.hpp"
#include "uavmdp/solver.hpp"

namespace uavmdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using StateKey = std::tuple<int, int, bool>;  // level, data, blocked
using Occupancy = std::map<StateKey, double>;

int quanta_of(int mod_order) {
  return std::countr_zero(static_cast<unsigned>(mod_order));
}

// Raw action set: everything inside the height band and the data balance,
// plus the landing rule at slot N. No look-ahead pruning.
std::vector<MdpAction> raw_actions(const MdpModel& model, const MdpState& s) {
  const int n = model.horizon();
  const bool fixed = model.is_fixed_height();
  std::vector<MdpAction> out;
  for (HeightMove move :
       {HeightMove::kDescend, HeightMove::kHold, HeightMove::kAscend}) {
    if (fixed && move != HeightMove::kHold) continue;
    for (int m : model.params().mod_set) {
      if (quanta_of(m) > s.data) continue;
      if (s.slot == n) {
        if (!fixed && (s.level != 1 || move != HeightMove::kDescend)) continue;
      } else {
        const int next = s.level + static_cast<int>(move);
        if (next < 1 || next > model.num_levels()) continue;
      }
      out.push_back({move, m});
    }
  }
  return out;
}

bool goal(const MdpModel& model, const MdpState& s) {
  return s.data == 0 && (model.is_fixed_height() || s.level == 0);
}

// Next states of a raw action as (state, probability), computed here rather
// than through the solver.
std::vector<std::pair<MdpState, double>> branch(const MdpModel& model,
                                                const MdpState& s,
                                                const MdpAction& a) {
  const int data = s.data - quanta_of(a.mod_order);
  if (s.slot == model.horizon()) {
    const int level = model.is_fixed_height() ? 1 : 0;
    return {{MdpState{s.slot + 1, level, data, false}, 1.0}};
  }
  const int level = s.level + static_cast<int>(a.move);
  const double p =
      los_probability(model.height_m(level), model.params().channel);
  return {{MdpState{s.slot + 1, level, data, false}, p},
          {MdpState{s.slot + 1, level, data, true}, 1.0 - p}};
}

class TreeSearch {
 public:
  explicit TreeSearch(const MdpModel& model)
      : model_(model), policy_(model) {}

  double expand(const MdpState& s) {
    if (s.slot == model_.horizon() + 1) return goal(model_, s) ? 0.0 : kInf;
    ++nodes_;
    double best = kInf;
    MdpAction best_action;
    for (const MdpAction& a : raw_actions(model_, s)) {
      double total = model_.reward(s, a);
      for (const auto& [next, p] : branch(model_, s, a)) {
        if (p <= 0.0) continue;
        const double v = expand(next);
        total = std::isinf(v) ? kInf : total + p * v;
        if (std::isinf(total)) break;
      }
      if (total < best) {
        best = total;
        best_action = a;
      }
    }
    if (std::isfinite(best) && !policy_.find(s)) policy_.set(s, best_action);
    return best;
  }

  std::size_t nodes() const { return nodes_; }
  PolicyTable take_policy() { return std::move(policy_); }

 private:
  const MdpModel& model_;
  PolicyTable policy_;
  std::size_t nodes_ = 0;
};

double relative_gap(double a, double b) {
  if (std::isinf(a) && std::isinf(b)) return 0.0;
  if (std::isinf(a) || std::isinf(b)) return kInf;
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Portable draws; the std distributions are implementation-defined.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() %
                                 static_cast<std::uint64_t>(hi - lo + 1));
  }
  double real(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

double evaluate_policy_exact(const PolicyTable& policy, const MdpModel& model) {
  const MdpState init = model.initial_state();
  Occupancy current{{{init.level, init.data, init.blocked}, 1.0}};
  double expected = 0.0;

  for (int t = 1; t <= model.horizon(); ++t) {
    Occupancy next;
    for (const auto& [key, mass] : current) {
      if (mass <= 0.0) continue;
      const auto& [level, data, blocked] = key;
      const MdpState s{t, level, data, blocked};
      const MdpAction a = policy.at(s);
      expected += mass * model.reward(s, a);
      for (const Transition& tr : model.successors(s, a)) {
        next[{tr.next.level, tr.next.data, tr.next.blocked}] +=
            mass * tr.probability;
      }
    }
    current = std::move(next);
  }

  for (const auto& [key, mass] : current) {
    const auto& [level, data, blocked] = key;
    if (mass > 0.0 &&
        !model.is_goal(MdpState{model.horizon() + 1, level, data, blocked})) {
      return kInf;
    }
  }
  return expected;
}

BruteForceResult brute_force_optimum(const MdpModel& model, std::size_t guard) {
  const double branching = static_cast<double>(model.moves().size()) *
                           static_cast<double>(model.params().mod_set.size()) *
                           2.0;
  const double bound = std::pow(branching, model.horizon());
  if (bound > static_cast<double>(guard)) {
    std::ostringstream msg;
    msg << "brute force refused: decision tree bound " << bound
        << " nodes exceeds guard " << guard << " (N = " << model.horizon()
        << ", " << model.moves().size() << " moves, "
        << model.params().mod_set.size() << " constellation sizes)";
    throw GuardExceededError(msg.str());
  }
  TreeSearch search(model);
  BruteForceResult result;
  result.value_j = search.expand(model.initial_state());
  result.nodes = search.nodes();
  result.policy = search.take_policy();
  return result;
}

EnumerationResult enumerate_markov_policies(const MdpModel& model,
                                            std::size_t guard) {
  // Reachable states per slot under any raw action.
  struct Decision {
    MdpState state;
    std::vector<MdpAction> actions;
  };
  std::vector<Decision> decisions;
  std::map<std::tuple<int, int, int, bool>, std::size_t> decision_of;

  std::vector<MdpState> frontier{model.initial_state()};
  double count = 1.0;
  for (int t = 1; t <= model.horizon(); ++t) {
    std::map<StateKey, MdpState> next_frontier;
    for (const MdpState& s : frontier) {
      auto actions = raw_actions(model, s);
      count *= static_cast<double>(std::max<std::size_t>(actions.size(), 1));
      for (const MdpAction& a : actions) {
        for (const auto& [next, p] : branch(model, s, a)) {
          if (p > 0.0 && next.slot <= model.horizon()) {
            next_frontier.emplace(StateKey{next.level, next.data, next.blocked},
                                  next);
          }
        }
      }
      decision_of[{s.slot, s.level, s.data, s.blocked}] = decisions.size();
      decisions.push_back({s, std::move(actions)});
    }
    frontier.clear();
    for (auto& [key, s] : next_frontier) frontier.push_back(s);
  }
  if (count > static_cast<double>(guard)) {
    std::ostringstream msg;
    msg << "policy enumeration refused: " << count
        << " deterministic policies exceed guard " << guard;
    throw GuardExceededError(msg.str());
  }

  // Odometer over one action index per decision state.
  std::vector<std::size_t> choice(decisions.size(), 0);
  EnumerationResult result{kInf, 0};
  while (true) {
    ++result.policies;

    // Exact forward evaluation; a reached state without actions costs +inf.
    std::map<std::tuple<int, int, int, bool>, double> current{
        {{1, model.initial_state().level, model.initial_state().data,
          model.initial_state().blocked},
         1.0}};
    double expected = 0.0;
    bool dead = false;
    for (int t = 1; t <= model.horizon() && !dead; ++t) {
      std::map<std::tuple<int, int, int, bool>, double> next;
      for (const auto& [key, mass] : current) {
        const std::size_t d = decision_of.at(key);
        if (decisions[d].actions.empty()) {
          dead = true;
          break;
        }
        const MdpAction& a = decisions[d].actions[choice[d]];
        expected += mass * model.reward(decisions[d].state, a);
        for (const auto& [ns, p] : branch(model, decisions[d].state, a)) {
          if (p <= 0.0) continue;
          if (ns.slot > model.horizon()) {
            if (!goal(model, ns)) dead = true;
            continue;
          }
          next[{ns.slot, ns.level, ns.data, ns.blocked}] += mass * p;
        }
      }
      current = std::move(next);
    }
    if (!dead) result.value_j = std::min(result.value_j, expected);

    std::size_t i = 0;
    for (; i < decisions.size(); ++i) {
      const std::size_t n = std::max<std::size_t>(decisions[i].actions.size(), 1);
      if (++choice[i] < n) break;
      choice[i] = 0;
    }
    if (i == decisions.size()) break;
  }
  return result;
}

SystemParams random_small_instance(std::uint64_t seed) {
  Draw draw(seed);
  SystemParams p;
  p.n_slots = draw.integer(2, 4);
  p.height_step_m = draw.pick(std::vector<double>{10, 20, 30, 40, 50});
  p.height_max_m = p.height_step_m * draw.integer(1, 3);
  p.mod_set = draw.pick(std::vector<std::vector<int>>{
      {1}, {1, 2}, {1, 2}, {1, 4}, {1, 2, 4}, {1, 2, 4}, {1, 2, 8}, {1, 4, 8}});
  p.link.slot_duration_s = draw.pick(std::vector<double>{1, 10, 50});
  p.symbol_rate = draw.pick(std::vector<double>{1e3, 1.2e5});
  p.data_bits = draw.integer(0, 3) * p.data_quantum_bits();
  p.initial_blocked = draw.integer(0, 9) < 3;
  p.channel.kappa = draw.pick(std::vector<double>{1.0, 1e-1, 1e-3});
  p.channel.alpha = draw.real(2.0, 4.0);
  p.channel.beta0 = draw.pick(std::vector<double>{1.0, 1e-3});
  p.channel.a_env = draw.real(0.5, 2.0);
  p.channel.b_env = draw.real(0.5, 2.0);
  p.channel.radius_m = draw.real(20.0, 100.0);
  p.channel.geometric_distance = draw.integer(0, 1) == 1;
  p.link.sigma2_w = std::pow(10.0, draw.real(-14.0, -9.0));
  p.link.ber_threshold = draw.pick(std::vector<double>{1e-3, 1e-5, 1e-6});
  return p;
}

CertificationReport certify(std::size_t n_instances, std::uint64_t seed,
                            double rel_tol) {
  CertificationReport report;
  report.rel_tol = rel_tol;
  for (std::size_t i = 0; i < n_instances; ++i) {
    const std::uint64_t instance_seed = seed + i;
    const SystemParams params = random_small_instance(instance_seed);
    const MdpModel model = MdpModel::joint(params);

    CertificationCase c;
    c.seed = instance_seed;
    c.n_slots = params.n_slots;
    c.levels = model.num_levels();
    c.mod_set_size = static_cast<int>(params.mod_set.size());
    c.data_quanta = model.data_quanta();
    c.kappa = params.channel.kappa;
    try {
      const Solution sol = solve(model);
      c.solver_j = value_of_initial_state(sol.values, model);
    } catch (const InfeasibleInstanceError&) {
      c.solver_j = kInf;
    }
    c.oracle_j = brute_force_optimum(model).value_j;
    c.rel_gap = relative_gap(c.solver_j, c.oracle_j);
    c.agree = c.rel_gap <= rel_tol;
    if (c.agree) ++report.agreed;
    if (std::isfinite(c.rel_gap) || !c.agree) {
      report.max_rel_gap = std::max(report.max_rel_gap, c.rel_gap);
    }
    report.cases.push_back(c);
  }
  return report;
}

void write_certification_csv(std::ostream& out,
                             const CertificationReport& report) {
  out << "seed,n_slots,levels,mod_set_size,data_quanta,kappa,solver_j,"
         "oracle_j,rel_gap,agree\n";
  for (const auto& c : report.cases) {
    out << c.seed << ',' << c.n_slots << ',' << c.levels << ','
        << c.mod_set_size << ',' << c.data_quanta << ','
        << format_number(c.kappa) << ',' << format_number(c.solver_j) << ','
        << format_number(c.oracle_j) << ',' << format_number(c.rel_gap) << ','
        << (c.agree ? 1 : 0) << '\n';
  }
}

}  // namespace uavmdp
