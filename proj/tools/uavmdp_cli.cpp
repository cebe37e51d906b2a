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

// Command-line front end: solve, simulate, experiment, certify.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "uavmdp/config.hpp"
#include "uavmdp/csv_output.hpp"
#include "uavmdp/errors.hpp"
#include "uavmdp/experiments.hpp"
#include "uavmdp/oracle.hpp"
#include "uavmdp/simulator.hpp"
#include "uavmdp/solver.hpp"

namespace fs = std::filesystem;
using namespace uavmdp;

namespace {

constexpr int kExitError = 1;
constexpr int kExitCertificationFailed = 2;

struct Overrides {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::uint64_t rollouts = 0;
  std::string blockage_file;
  bool geometric_distance = false;
  int instances = 0;
};

bool given(const CLI::App& cmd, const std::string& name) {
  const CLI::Option* opt = cmd.get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

RunConfig effective_config(const Overrides& o, const CLI::App& cmd) {
  RunConfig c = o.config_path.empty() ? parse_config("") : load_config(o.config_path);
  if (!o.out_dir.empty()) c.output_dir = o.out_dir;
  if (given(cmd, "--seed")) c.seed = o.seed;
  if (given(cmd, "--rollouts")) c.rollouts = o.rollouts;
  if (given(cmd, "--instances")) c.certify_instances = o.instances;
  if (o.geometric_distance) c.geometric_distance = true;
  c.validate();
  return c;
}

std::ofstream open_output(const RunConfig& c, const std::string& name) {
  fs::create_directories(c.output_dir);
  const fs::path path = fs::path(c.output_dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

CsvProvenance provenance(const RunConfig& c) {
  CsvProvenance p{config_digest(c), c.seed, {}};
  p.notes.push_back("assumed: symbol_rate=" + format_number(c.symbol_rate) +
                    " sym/s, noise_power_w=" + format_number(c.noise_power()) +
                    (c.noise_power_w ? " (configured)"
                                     : " (noise density over " +
                                           format_number(c.noise_bandwidth_hz.value_or(
                                               c.symbol_rate)) +
                                           " Hz)"));
  p.notes.push_back(std::string("distance_mode=") +
                    (c.geometric_distance ? "geometric" : "literal"));
  return p;
}

void write_config_copy(const RunConfig& c) {
  fs::create_directories(c.output_dir);
  save_config(c, fs::path(c.output_dir) / "config.json");
}

int cmd_solve(const RunConfig& c) {
  write_config_copy(c);
  const MdpModel model = MdpModel::joint(c.system_params());
  const Solution sol = solve(model);
  const double v1 = value_of_initial_state(sol.values, model);

  auto out = open_output(c, "lookup_table.csv");
  write_provenance(out, provenance(c));
  for (int t = 1; t <= model.horizon(); ++t) {
    write_lookup_csv(out, export_lookup_table(sol, model, t), t == 1);
  }

  std::cout << "V_1 = " << format_number(v1) << " J\n"
            << "states: " << model.state_count()
            << ", policy entries: " << sol.policy.entry_count() << '\n'
            << "lookup table: " << (fs::path(c.output_dir) / "lookup_table.csv").string()
            << '\n';
  return 0;
}

void print_trace(const RolloutTrace& trace) {
  std::printf("%-5s %-9s %-10s %-9s %-14s\n", "slot", "blockage", "modulation",
              "height_m", "energy_j");
  for (const auto& s : trace.steps) {
    std::printf("%-5d %-9s %-10s %-9g %-14.6g\n", s.slot,
                s.blocked ? "Yes" : "No", modulation_name(s.mod_order).c_str(),
                s.height_m, s.energy_j);
  }
  std::printf("total energy %.9g J, delivered %.9g bits\n",
              trace.total_energy_j, trace.bits_delivered);
}

int cmd_simulate(const RunConfig& c, const std::string& blockage_file) {
  write_config_copy(c);
  const MdpModel model = MdpModel::joint(c.system_params());
  const Solution sol = solve(model);
  const double v1 = value_of_initial_state(sol.values, model);
  const double q = model.params().data_quantum_bits();

  if (!blockage_file.empty()) {
    std::ifstream in(blockage_file);
    if (!in) throw std::runtime_error("cannot open " + blockage_file);
    const RolloutTrace trace =
        rollout_with_blockage(sol.policy, model, parse_blockage_sequence(in));
    auto out = open_output(c, "trace.csv");
    write_provenance(out, provenance(c));
    write_trace_csv(out, trace, q);
    print_trace(trace);
    return 0;
  }

  const RolloutTrace trace = rollout(sol.policy, model, RngSeed{c.seed});
  {
    auto out = open_output(c, "trace.csv");
    write_provenance(out, provenance(c));
    write_trace_csv(out, trace, q);
  }
  print_trace(trace);

  const EnergyEstimate est =
      estimate_expected_energy(sol.policy, model, c.rollouts, RngSeed{c.seed});
  const double z = est.std_error_j > 0 ? (est.mean_j - v1) / est.std_error_j : 0.0;
  auto out = open_output(c, "energy_estimate.csv");
  write_provenance(out, provenance(c));
  out << "rollouts,mean_j,std_error_j,v1_j,z_score\n"
      << est.rollouts << ',' << format_number(est.mean_j) << ','
      << format_number(est.std_error_j) << ',' << format_number(v1) << ','
      << format_number(z) << '\n';
  std::cout << "Monte Carlo: mean " << format_number(est.mean_j) << " J, SE "
            << format_number(est.std_error_j) << " J over " << est.rollouts
            << " rollouts; V_1 = " << format_number(v1) << " J (z = "
            << format_number(z) << ")\n";
  return 0;
}

int cmd_experiment(const RunConfig& c, const std::string& which) {
  write_config_copy(c);
  const SystemParams params = c.system_params();
  if (which == "fixed-height") {
    const auto result = sweep_fixed_height(params, c.fixed_height_grid());
    auto out = open_output(c, "fixed_height.csv");
    write_provenance(out, provenance(c));
    write_fixed_height_csv(out, result);
    std::cout << "best fixed height " << format_number(result.best_height_m)
              << " m, energy " << format_number(result.best_energy_j) << " J ("
              << result.points.size() << " heights)\n";
  } else if (which == "u-sweep") {
    const auto result =
        compare_joint_vs_fixed(params, c.u_values_m, c.fixed_height_grid());
    auto out = open_output(c, "u_sweep.csv");
    write_provenance(out, provenance(c));
    write_u_sweep_csv(out, result);
    std::cout << "best fixed height " << format_number(result.baseline->best_height_m)
              << " m, energy " << format_number(result.baseline->best_energy_j)
              << " J\n";
    for (const auto& p : result.points) {
      std::printf("u = %4g m: joint %.6g J, savings %.2f%%\n", p.x, p.energy_j,
                  100.0 * p.savings);
    }
  } else if (which == "modset-sweep") {
    const auto result =
        sweep_modulation_set(params, c.modset_max_size, c.saturation_tol);
    auto out = open_output(c, "modset_sweep.csv");
    write_provenance(out, provenance(c));
    write_modset_csv(out, result);
    for (const auto& p : result.points) {
      std::printf("size %2d: %s\n", static_cast<int>(p.x),
                  p.feasible ? (format_number(p.energy_j) + " J").c_str()
                             : "infeasible");
    }
    std::cout << "monotone: " << (result.monotone ? "yes" : "NO")
              << ", saturation size: "
              << (result.saturation_size ? std::to_string(*result.saturation_size)
                                         : std::string("not reached"))
              << '\n';
    if (!result.monotone) return kExitError;
  } else {
    throw std::invalid_argument("unknown experiment '" + which + "'");
  }
  return 0;
}

int cmd_certify(const RunConfig& c) {
  write_config_copy(c);
  const auto report =
      certify(static_cast<std::size_t>(c.certify_instances), c.seed);
  auto out = open_output(c, "certification.csv");
  write_provenance(out, provenance(c));
  write_certification_csv(out, report);
  std::cout << report.agreed << "/" << report.cases.size()
            << " instances agree (max relative gap "
            << format_number(report.max_rel_gap) << ", tolerance "
            << format_number(report.rel_tol) << ")\n";
  return report.all_agree() ? 0 : kExitCertificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint modulation and flight-height control for UAV data harvesting"};
  app.require_subcommand(1);

  Overrides o;
  auto add_common = [&o](CLI::App* cmd) {
    cmd->add_option("--config", o.config_path, "JSON config file")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", o.out_dir, "Output directory");
    cmd->add_option("--seed", o.seed, "Random seed");
    cmd->add_flag("--geometric-distance", o.geometric_distance,
                  "Use H^2 + R^2 as the squared distance");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Backward induction and lookup table");
  add_common(solve_cmd);

  auto* sim_cmd = app.add_subcommand("simulate", "Roll out the optimal policy");
  add_common(sim_cmd);
  sim_cmd->add_option("--rollouts", o.rollouts, "Monte Carlo rollouts");
  sim_cmd->add_option("--blockage-file", o.blockage_file,
                      "Replay a blockage sequence (one entry per slot)")
      ->check(CLI::ExistingFile);

  auto* exp_cmd = app.add_subcommand("experiment", "Baseline comparisons");
  exp_cmd->require_subcommand(1);
  std::string experiment;
  const std::pair<const char*, const char*> experiments[] = {
      {"fixed-height", "Best single altitude over the height grid"},
      {"u-sweep", "Joint design against the best fixed height, per u"},
      {"modset-sweep", "Energy for nested modulation sets"}};
  for (const auto& [name, help] : experiments) {
    auto* sub = exp_cmd->add_subcommand(name, help);
    add_common(sub);
    sub->callback([&experiment, name]() { experiment = name; });
  }

  auto* cert_cmd = app.add_subcommand("certify", "Compare solver against brute force");
  add_common(cert_cmd);
  cert_cmd->add_option("--instances", o.instances, "Random instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return cmd_solve(effective_config(o, *solve_cmd));
    if (*sim_cmd) {
      return cmd_simulate(effective_config(o, *sim_cmd), o.blockage_file);
    }
    if (*exp_cmd) {
      const CLI::App* sub = exp_cmd->get_subcommand(experiment);
      return cmd_experiment(effective_config(o, *sub), experiment);
    }
    if (*cert_cmd) return cmd_certify(effective_config(o, *cert_cmd));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitError;
  } catch (const InfeasibleInstanceError& e) {
    std::cerr << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
