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

#include "uavmdp/experiments.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "uavmdp/csv_output.hpp"
#include "uavmdp/errors.hpp"
#include "uavmdp/solver.hpp"

namespace uavmdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double savings_fraction(double energy, double baseline) {
  if (baseline == 0.0 || std::isinf(baseline)) return 0.0;
  return 1.0 - energy / baseline;
}

}  // namespace

double solve_fixed_height(const SystemParams& params, double height_m) {
  const MdpModel model = MdpModel::fixed_height(params, height_m);
  return value_of_initial_state(solve(model).values, model);
}

double solve_joint(const SystemParams& params) {
  const MdpModel model = MdpModel::joint(params);
  return value_of_initial_state(solve(model).values, model);
}

FixedHeightResult sweep_fixed_height(const SystemParams& params,
                                     const HeightGrid& grid) {
  if (!(grid.step_m > 0) || !(grid.min_m <= grid.max_m) || !(grid.min_m > 0)) {
    throw std::invalid_argument(
        "height grid: need 0 < min <= max and step > 0");
  }
  FixedHeightResult result;
  result.best_energy_j = kInf;
  const long long count =
      static_cast<long long>(std::floor((grid.max_m - grid.min_m) / grid.step_m +
                                        1e-9)) +
      1;
  for (long long i = 0; i < count; ++i) {
    const double h = grid.min_m + static_cast<double>(i) * grid.step_m;
    const double e = solve_fixed_height(params, h);
    result.points.push_back({h, e});
    if (e < result.best_energy_j) {
      result.best_energy_j = e;
      result.best_height_m = h;
    }
  }
  return result;
}

SweepResult compare_joint_vs_fixed(const SystemParams& params,
                                   const std::vector<double>& u_values,
                                   const HeightGrid& grid) {
  SweepResult result;
  result.variable = "u_m";
  result.baseline = sweep_fixed_height(params, grid);
  const double baseline = result.baseline->best_energy_j;
  for (double u : u_values) {
    SystemParams p = params;
    p.height_step_m = u;
    const double joint = solve_joint(p);
    result.points.push_back(
        {u, joint, baseline, savings_fraction(joint, baseline), 0.0, true});
  }
  return result;
}

SweepResult sweep_modulation_set(const SystemParams& params, int max_size,
                                 double saturation_tol) {
  if (max_size < 2) {
    throw std::invalid_argument("modulation sweep: max_size must be >= 2");
  }
  SweepResult result;
  result.variable = "set_size";
  std::vector<int> set;
  double first_feasible = kInf;
  for (int k = 1; k <= max_size; ++k) {
    set.push_back(k == 1 ? 1 : (1 << (k - 1)));
    SystemParams p = params;
    p.mod_set = set;
    SweepPoint pt;
    pt.x = k;
    try {
      pt.energy_j = solve_joint(p);
    } catch (const InfeasibleInstanceError&) {
      pt.energy_j = kInf;
      pt.feasible = false;
    }
    if (pt.feasible && std::isinf(first_feasible)) first_feasible = pt.energy_j;
    pt.baseline_j = first_feasible;
    pt.savings = pt.feasible ? savings_fraction(pt.energy_j, first_feasible) : 0.0;
    if (!result.points.empty()) {
      const double prev = result.points.back().energy_j;
      if (pt.energy_j > prev) result.monotone = false;
      if (std::isinf(prev)) {
        pt.rel_improvement = pt.feasible ? 1.0 : 0.0;
      } else if (prev > 0.0) {
        pt.rel_improvement = (prev - pt.energy_j) / prev;
      }
    }
    result.points.push_back(pt);
  }

  // Smallest size after which no step improves by saturation_tol or more.
  int saturation = static_cast<int>(result.points.size());
  for (int i = static_cast<int>(result.points.size()) - 1; i >= 1; --i) {
    if (result.points[static_cast<std::size_t>(i)].rel_improvement >=
        saturation_tol) {
      break;
    }
    saturation = i;
  }
  if (saturation < static_cast<int>(result.points.size()) &&
      result.points[static_cast<std::size_t>(saturation - 1)].feasible) {
    result.saturation_size = saturation;
  }
  return result;
}

void write_fixed_height_csv(std::ostream& out, const FixedHeightResult& result) {
  out << "height_m,energy_j\n";
  for (const auto& p : result.points) {
    out << format_number(p.height_m) << ',' << format_number(p.energy_j) << '\n';
  }
}

void write_u_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "u_m,joint_energy_j,fixed_energy_j,best_fixed_height_m,savings\n";
  const double best_h = result.baseline ? result.baseline->best_height_m : 0.0;
  for (const auto& p : result.points) {
    out << format_number(p.x) << ',' << format_number(p.energy_j) << ','
        << format_number(p.baseline_j) << ',' << format_number(best_h) << ','
        << format_number(p.savings) << '\n';
  }
}

void write_modset_csv(std::ostream& out, const SweepResult& result) {
  out << "set_size,max_mod_order,energy_j,feasible,rel_improvement,savings\n";
  for (const auto& p : result.points) {
    const int k = static_cast<int>(p.x);
    out << k << ',' << (k == 1 ? 1 : (1 << (k - 1))) << ','
        << format_number(p.energy_j) << ',' << (p.feasible ? 1 : 0) << ','
        << format_number(p.rel_improvement) << ',' << format_number(p.savings)
        << '\n';
  }
}

}  // namespace uavmdp
