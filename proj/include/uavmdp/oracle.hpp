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

#ifndef UAVMDP_ORACLE_HPP_
#define UAVMDP_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "uavmdp/mdp_model.hpp"
#include "uavmdp/tables.hpp"

namespace uavmdp {

// Brute-force reference answers for tiny instances. Nothing here reuses the
// solver's recursion: only the model's reward, LoS probability and
// successor kernel are shared.

inline constexpr std::size_t kOracleGuard = 10'000'000;

/// Exact expected energy of `policy` from the initial state, by pushing the
/// state-occupancy distribution forward slot by slot. Returns +infinity when
/// mass ends outside the goal set. Throws PolicyCoverageError when a state
/// reached with positive probability has no action.
double evaluate_policy_exact(const PolicyTable& policy, const MdpModel& model);

struct BruteForceResult {
  double value_j = 0.0;
  PolicyTable policy;        // an optimal action for every state visited
  std::size_t nodes = 0;     // decision nodes expanded
};

/// Exhaustive expectimin over the full decision tree (every action at every
/// node, both blockage outcomes), checking the takeoff, landing, height-band
/// and data constraints directly at the leaves. Refuses with
/// GuardExceededError when the tree bound (|moves| |M| 2)^N exceeds `guard`.
BruteForceResult brute_force_optimum(const MdpModel& model,
                                     std::size_t guard = kOracleGuard);

struct EnumerationResult {
  double value_j = 0.0;
  std::size_t policies = 0;
};

/// Minimum exact expected energy over every deterministic Markov policy on
/// the reachable state set. Refuses when the policy count exceeds `guard`.
EnumerationResult enumerate_markov_policies(const MdpModel& model,
                                            std::size_t guard = kOracleGuard);

/// Random tiny instance: N in [2, 4], at most 3 height levels, at most three
/// constellation sizes, D <= 3 quanta, kappa in {1, 0.1, 1e-3}.
SystemParams random_small_instance(std::uint64_t seed);

struct CertificationCase {
  std::uint64_t seed = 0;
  int n_slots = 0;
  int levels = 0;
  int mod_set_size = 0;
  int data_quanta = 0;
  double kappa = 0.0;
  double solver_j = 0.0;   // +inf when the solver reports infeasibility
  double oracle_j = 0.0;
  double rel_gap = 0.0;
  bool agree = false;
};

struct CertificationReport {
  std::vector<CertificationCase> cases;
  std::size_t agreed = 0;
  double max_rel_gap = 0.0;
  double rel_tol = 0.0;

  bool all_agree() const { return agreed == cases.size(); }
};

/// Solves `n_instances` random instances with backward induction and with
/// brute_force_optimum. Instance i uses seed `seed + i`.
CertificationReport certify(std::size_t n_instances, std::uint64_t seed,
                            double rel_tol = 1e-9);

// Header: seed,n_slots,levels,mod_set_size,data_quanta,kappa,solver_j,
// oracle_j,rel_gap,agree
void write_certification_csv(std::ostream& out,
                             const CertificationReport& report);

}  // namespace uavmdp

#endif  // UAVMDP_ORACLE_HPP_
