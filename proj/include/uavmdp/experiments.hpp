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

#ifndef UAVMDP_EXPERIMENTS_HPP_
#define UAVMDP_EXPERIMENTS_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uavmdp/mdp_model.hpp"

namespace uavmdp {

// Baseline: online modulation at one altitude for the whole mission, with no
// takeoff or landing constraint. Returns V_1 of that restricted process.
// Throws InfeasibleInstanceError when the data cannot be delivered.
double solve_fixed_height(const SystemParams& params, double height_m);

// V_1 of the joint height/modulation process.
double solve_joint(const SystemParams& params);

struct HeightGrid {
  double min_m = 1.0;
  double max_m = 400.0;
  double step_m = 1.0;
};

struct FixedHeightPoint {
  double height_m = 0.0;
  double energy_j = 0.0;
};

struct FixedHeightResult {
  std::vector<FixedHeightPoint> points;
  double best_height_m = 0.0;
  double best_energy_j = 0.0;
};

/// Baseline energy at every grid height; the argmin keeps the lowest height
/// on ties.
FixedHeightResult sweep_fixed_height(const SystemParams& params,
                                     const HeightGrid& grid = {});

struct SweepPoint {
  double x = 0.0;               // u in metres, or modulation-set size
  double energy_j = 0.0;        // +inf when infeasible
  double baseline_j = 0.0;
  double savings = 0.0;         // 1 - energy / baseline, 0 if baseline is 0
  double rel_improvement = 0.0; // vs. previous point (modulation sweep only)
  bool feasible = true;
};

struct SweepResult {
  std::string variable;
  std::vector<SweepPoint> points;
  // Modulation sweep only.
  bool monotone = true;
  std::optional<int> saturation_size;
  // u sweep only.
  std::optional<FixedHeightResult> baseline;
};

/// Joint-design energy for each height step u against the best fixed height
/// on `grid`. Each u must divide params.height_max_m.
SweepResult compare_joint_vs_fixed(const SystemParams& params,
                                   const std::vector<double>& u_values,
                                   const HeightGrid& grid = {});

/// V_1 for nested sets {1}, {1, 2}, {1, 2, 4}, ... up to `max_size` entries.
/// Savings are relative to the first feasible set. The saturation size is the
/// smallest k after which every further relative improvement is below
/// `saturation_tol`.
SweepResult sweep_modulation_set(const SystemParams& params, int max_size,
                                 double saturation_tol = 1e-6);

// Header: height_m,energy_j
void write_fixed_height_csv(std::ostream& out, const FixedHeightResult& result);
// Header: u_m,joint_energy_j,fixed_energy_j,best_fixed_height_m,savings
void write_u_sweep_csv(std::ostream& out, const SweepResult& result);
// Header: set_size,max_mod_order,energy_j,feasible,rel_improvement,savings
void write_modset_csv(std::ostream& out, const SweepResult& result);

}  // namespace uavmdp

#endif  // UAVMDP_EXPERIMENTS_HPP_
