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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "uavmdp/channel_energy.hpp"
#include "uavmdp/experiments.hpp"
#include "uavmdp/oracle.hpp"
#include "uavmdp/simulator.hpp"
#include "uavmdp/solver.hpp"

namespace {

using namespace uavmdp;

constexpr std::size_t kCertifyInstances = 200;
constexpr std::uint64_t kCertifySeed = 1;
constexpr double kOracleRelTol = 1e-9;
constexpr std::size_t kMonteCarloRollouts = 100000;
constexpr std::uint64_t kMonteCarloSeed = 20240601;
constexpr double kMonteCarloSigmas = 3.0;
constexpr double kExactEvalRelTol = 1e-9;
constexpr double kReproductionBand = 0.20;
constexpr double kReferenceBestHeight = 23.0;
constexpr double kReferenceSavings = 0.4823;
constexpr double kSaturationTol = 1e-3;
constexpr int kSaturationFrom = 6;
constexpr double kBerRoundTripTol = 1e-12;
constexpr std::size_t kSampledSequences = 1000;
constexpr std::uint64_t kSequenceSeed = 7;

const std::vector<bool> kReferenceBlockage = {false, true,  false, true,  false,
                                              false, true,  false, true,  false};
const std::vector<int> kReferenceModulation = {2, 1, 2, 1, 2, 2, 1, 2, 1, 1};
const std::vector<double> kReferenceHeights = {30, 60, 90, 120, 120,
                                               120, 120, 90, 60, 30};

struct Outcome {
  bool pass = false;
  std::string detail;
};

double rel_diff(double a, double b) {
  if (std::isinf(a) && std::isinf(b)) return 0.0;
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// D_{N+1} = 0, H_1 = H_N = u, steps in {-u, 0, +u}, landed.
bool trace_sound(const MdpModel& model, const RolloutTrace& trace) {
  const double u = model.params().height_step_m;
  if (trace.steps.size() != static_cast<std::size_t>(model.horizon())) return false;
  if (trace.final_data_quanta != 0 || trace.final_height_m != 0.0) return false;
  if (trace.steps.front().height_m != u || trace.steps.back().height_m != u) return false;
  for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i) {
    const double step = trace.steps[i + 1].height_m - trace.steps[i].height_m;
    if (step != 0.0 && std::abs(step) != u) return false;
  }
  return true;
}

Outcome ac1_oracle_equivalence() {
  const CertificationReport r = certify(kCertifyInstances, kCertifySeed, kOracleRelTol);
  std::size_t feasible = 0;
  for (const auto& c : r.cases) {
    if (std::isfinite(c.solver_j)) ++feasible;
  }
  std::ostringstream d;
  d << r.agreed << "/" << r.cases.size() << " instances agree (" << feasible
    << " feasible), max rel gap " << r.max_rel_gap;
  return {r.all_agree() && r.cases.size() == kCertifyInstances, d.str()};
}

Outcome ac2_monte_carlo() {
  const MdpModel model = MdpModel::joint(SystemParams{});
  const Solution sol = solve(model);
  const double v1 = value_of_initial_state(sol.values, model);
  const EnergyEstimate est = estimate_expected_energy(
      sol.policy, model, kMonteCarloRollouts, RngSeed{kMonteCarloSeed});
  const double exact = evaluate_policy_exact(sol.policy, model);
  const double z = (est.mean_j - v1) / est.std_error_j;
  const double gap = rel_diff(exact, v1);
  std::ostringstream d;
  d << "V_1 " << v1 << " J, MC mean " << est.mean_j << " J, SE " << est.std_error_j
    << " J, z " << z << "; exact eval rel gap " << gap;
  return {std::abs(z) <= kMonteCarloSigmas && gap <= kExactEvalRelTol, d.str()};
}

Outcome ac3_reference_trace() {
  const MdpModel model = MdpModel::joint(SystemParams{});
  const Solution sol = solve(model);
  const RolloutTrace t = rollout_with_blockage(sol.policy, model, kReferenceBlockage);

  bool silent_nlos = true;
  int mod_match = 0;
  int height_match = 0;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    if (t.steps[i].blocked && t.steps[i].quanta_sent != 0) silent_nlos = false;
    if (t.steps[i].mod_order == kReferenceModulation[i]) ++mod_match;
    if (t.steps[i].height_m == kReferenceHeights[i]) ++height_match;
  }
  const bool sound = trace_sound(model, t);
  const bool delivered = t.bits_delivered == 30e6;
  std::ostringstream d;
  d << "silent in NLoS " << (silent_nlos ? "yes" : "no") << ", H_1=H_N=30 m with unit steps "
    << (sound ? "yes" : "no") << ", delivered " << t.bits_delivered / 1e6
    << " Mbit; reported match: modulation " << mod_match << "/10 slots, height "
    << height_match << "/10 slots; heights";
  for (const auto& s : t.steps) d << ' ' << s.height_m;
  return {silent_nlos && sound && delivered, d.str()};
}

Outcome ac4_fixed_height() {
  const SystemParams p;
  const SweepResult r = compare_joint_vs_fixed(p, {10, 20, 30, 40, 50});
  const FixedHeightResult& base = *r.baseline;
  const bool full_sweep = base.points.size() == 400 && base.points.front().height_m == 1.0 &&
                          base.points.back().height_m == 400.0;
  bool all_feasible = r.points.size() == 5;
  double savings30 = 0.0;
  std::ostringstream d;
  d << "sweep " << base.points.size() << " heights, best " << base.best_height_m << " m ("
    << base.best_energy_j << " J); savings";
  for (const auto& pt : r.points) {
    d << " u=" << pt.x << ":" << pt.savings * 100 << "%";
    if (!pt.feasible || !std::isfinite(pt.energy_j)) all_feasible = false;
    if (pt.x == 30.0) savings30 = pt.savings;
  }
  const double h_dev = base.best_height_m / kReferenceBestHeight - 1.0;
  const double s_dev = savings30 / kReferenceSavings - 1.0;
  d << "; 23 m argmin " << (std::abs(h_dev) <= kReproductionBand ? "recovered" : "NOT recovered")
    << " (" << h_dev * 100 << "%), 48.23% savings "
    << (std::abs(s_dev) <= kReproductionBand ? "recovered" : "NOT recovered") << " ("
    << s_dev * 100 << "%); assumed r_s=" << p.symbol_rate << " sym/s, sigma2=" << p.link.sigma2_w
    << " W, H_max=" << p.height_max_m << " m";
  return {full_sweep && all_feasible, d.str()};
}

Outcome ac5_modulation_sweep() {
  const SweepResult r = sweep_modulation_set(SystemParams{}, 8, 1e-6);
  bool non_increasing = true;
  for (std::size_t k = 1; k < r.points.size(); ++k) {
    if (r.points[k].energy_j > r.points[k - 1].energy_j) non_increasing = false;
  }
  double beyond = 0.0;
  for (const auto& pt : r.points) {
    if (pt.x > kSaturationFrom && pt.feasible) beyond = std::max(beyond, pt.rel_improvement);
  }
  std::ostringstream d;
  d << "V_1 by size";
  for (const auto& pt : r.points) d << ' ' << pt.energy_j;
  d << "; max improvement beyond size 6 " << beyond << "; saturation size ";
  if (r.saturation_size) {
    d << *r.saturation_size;
  } else {
    d << "none";
  }
  return {non_increasing && r.monotone && beyond < kSaturationTol, d.str()};
}

Outcome ac6_channel() {
  const ChannelParams ch;
  const LinkParams link;
  bool los_up = true;
  bool loss_down = true;
  for (int h = 0; h < 600; ++h) {
    if (!(los_probability(h + 1, ch) > los_probability(h, ch))) los_up = false;
    for (bool b : {false, true}) {
      if (!(path_loss(h + 1, b, ch) < path_loss(h, b, ch))) loss_down = false;
    }
  }
  double worst_ber = 0.0;
  bool zero_iff_muting = true;
  for (int m : {1, 2, 4, 8, 16, 32, 64, 128, 256}) {
    for (double h = 1; h <= 600; h *= 1.5) {
      for (bool b : {false, true}) {
        const double g = path_loss(h, b, ch);
        const double e = slot_energy(m, g, link);
        if ((e == 0.0) != (m == 1)) zero_iff_muting = false;
        if (m > 1) {
          const double ber = approx_ber(m, g, required_power(m, g, link), link.sigma2_w);
          worst_ber = std::max(worst_ber, rel_diff(ber, link.ber_threshold));
        }
      }
    }
  }
  std::ostringstream d;
  d << "LoS prob increasing " << (los_up ? "yes" : "no") << ", path loss decreasing "
    << (loss_down ? "yes" : "no") << ", BER round-trip max rel err " << worst_ber
    << ", zero energy iff muting " << (zero_iff_muting ? "yes" : "no");
  return {los_up && loss_down && worst_ber <= kBerRoundTripTol && zero_iff_muting, d.str()};
}

Outcome ac7_terminal_soundness() {
  std::size_t checked = 0;
  std::size_t sound = 0;

  const MdpModel model = MdpModel::joint(SystemParams{});
  const Solution sol = solve(model);
  std::mt19937_64 rng(kSequenceSeed);
  for (std::size_t i = 0; i < kSampledSequences; ++i) {
    std::vector<bool> blockage(model.horizon());
    blockage[0] = model.params().initial_blocked;
    for (std::size_t t = 1; t < blockage.size(); ++t) blockage[t] = (rng() & 1u) != 0;
    ++checked;
    if (trace_sound(model, rollout_with_blockage(sol.policy, model, blockage))) ++sound;
  }

  std::size_t small_checked = 0;
  std::size_t small_sound = 0;
  for (bool initial : {false, true}) {
    SystemParams p;
    p.n_slots = 6;
    p.initial_blocked = initial;
    const MdpModel small = MdpModel::joint(p);
    const Solution s = solve(small);
    for (unsigned mask = 0; mask < (1u << 6); ++mask) {
      std::vector<bool> blockage(6);
      for (int t = 0; t < 6; ++t) blockage[t] = ((mask >> t) & 1u) != 0;
      if (blockage[0] != initial) continue;
      ++small_checked;
      if (trace_sound(small, rollout_with_blockage(s.policy, small, blockage))) ++small_sound;
    }
  }
  std::ostringstream d;
  d << "N=10: " << sound << "/" << checked << " sampled sequences sound; N=6: " << small_sound
    << "/" << small_checked << " sequences sound";
  return {sound == checked && small_sound == small_checked, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "oracle equivalence", ac1_oracle_equivalence},
      {"AC2", "Monte Carlo consistency", ac2_monte_carlo},
      {"AC3", "reference trace structure", ac3_reference_trace},
      {"AC4", "fixed-height comparison", ac4_fixed_height},
      {"AC5", "modulation-set sweep", ac5_modulation_sweep},
      {"AC6", "channel properties", ac6_channel},
      {"AC7", "terminal-constraint soundness", ac7_terminal_soundness},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %s %s: %s [%.2f s]\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs);
  }
  return failures == 0 ? 0 : 1;
}
