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

#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "uavmdp/config.hpp"
#include "uavmdp/errors.hpp"

using namespace uavmdp;

namespace {

RunConfig random_config(std::mt19937_64& rng) {
  auto pick = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  RunConfig c;
  c.n_slots = static_cast<int>(2 + rng() % 19);
  c.flight_time_s = c.n_slots * std::uniform_int_distribution<int>(1, 100)(rng);
  c.symbol_rate = std::uniform_int_distribution<int>(1, 200)(rng) * 1000.0;
  c.data_bits = c.symbol_rate * (c.flight_time_s / c.n_slots) * static_cast<double>(rng() % 6);
  c.height_step_m = std::uniform_int_distribution<int>(1, 50)(rng);
  c.height_max_m = c.height_step_m * static_cast<double>(1 + rng() % 10);
  c.mod_set = {1};
  for (int m = 2; m <= 64; m *= 2) {
    if (rng() % 2) c.mod_set.push_back(m);
  }
  c.initial_blocked = rng() % 2;
  c.radius_m = pick(1, 200);
  c.alpha = pick(2, 4);
  c.beta0 = pick(0.1, 2);
  c.kappa = pick(1e-4, 1);
  c.a_env = pick(0.1, 20);
  c.b_env = pick(0.1, 2);
  c.geometric_distance = rng() % 2;
  c.ber_threshold = pick(1e-9, 1e-2);
  c.noise_density_dbm_hz = pick(-180, -100);
  if (rng() % 2) c.noise_bandwidth_hz = pick(1e3, 1e6);
  if (rng() % 2) c.noise_power_w = pick(1e-15, 1e-9);
  c.seed = rng();
  c.rollouts = 1 + rng() % 1000000;
  c.fixed_height_min_m = pick(1, 10);
  c.fixed_height_max_m = c.fixed_height_min_m + pick(1, 500);
  c.fixed_height_step_m = pick(0.5, 5);
  c.u_values_m = {c.height_step_m};
  c.modset_max_size = static_cast<int>(2 + rng() % 7);
  c.saturation_tol = pick(1e-9, 1e-3);
  c.certify_instances = static_cast<int>(1 + rng() % 500);
  c.output_dir = "run_" + std::to_string(rng() % 1000);
  return c;
}

}  // namespace

TEST_CASE("empty input gives the defaults") {
  const RunConfig c = parse_config("");
  CHECK(c == RunConfig{});
  CHECK(parse_config("{}") == RunConfig{});
  const SystemParams p = c.system_params();
  CHECK(p.tau() == 50.0);
  CHECK(p.link.sigma2_w == doctest::Approx(1.2e-10).epsilon(1e-12));
  CHECK(p.data_quanta() == 5);
  CHECK(p.height_levels() == 20);
  CHECK(c.fixed_height_grid().max_m == 400.0);
}

TEST_CASE("noise power sources") {
  RunConfig c;
  c.noise_bandwidth_hz = 1.0;
  CHECK(c.noise_power() == doctest::Approx(1e-15).epsilon(1e-12));
  c.noise_power_w = 2e-10;
  CHECK(c.noise_power() == 2e-10);
  CHECK(c.system_params().link.sigma2_w == 2e-10);
}

TEST_CASE("invalid values are rejected with the field name") {
  CHECK_THROWS_WITH_AS(parse_config(R"({"height_step_m": 7, "height_max_m": 400})"),
                       doctest::Contains("height_max_m"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"ber_threshold": 0.3})"),
                       doctest::Contains("ber_threshold"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"data_bits": 31e6})"),
                       doctest::Contains("q"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"u_values_m": [30, 7]})"),
                       doctest::Contains("u_values_m"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"mod_set": [1, 3]})"),
                       doctest::Contains("mod_set"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"n_slots": 0})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"kappa": 0})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"rollouts": 0})"), ConfigError);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_WITH_AS(parse_config(R"({"n_slot": 10})"),
                       doctest::Contains("n_slot: unknown key"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"n_slots": "ten"})"),
                       doctest::Contains("n_slots"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(R"({"mod_set": 2})"),
                       doctest::Contains("mod_set"), ConfigError);
  CHECK_THROWS_AS(parse_config("{\"n_slots\": 10"), ConfigError);
  CHECK_THROWS_AS(parse_config("[1, 2]"), ConfigError);
}

TEST_CASE("dump and parse round-trip") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const RunConfig c = random_config(rng);
    REQUIRE_NOTHROW(c.validate());
    const RunConfig back = parse_config(dump_config(c));
    CHECK(back == c);
    CHECK(config_digest(back) == config_digest(c));
  }
}

TEST_CASE("digest is stable and sensitive") {
  const RunConfig a;
  RunConfig b;
  CHECK(config_digest(a) == config_digest(b));
  CHECK(config_digest(a).size() == 16u);
  b.kappa = 1e-2;
  CHECK(config_digest(a) != config_digest(b));
  // Key order in the input does not matter.
  CHECK(config_digest(parse_config(R"({"kappa": 0.5, "alpha": 2.5})")) ==
        config_digest(parse_config(R"({"alpha": 2.5, "kappa": 0.5})")));
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "uavmdp_config_test";
  std::filesystem::create_directories(dir);
  RunConfig c;
  c.n_slots = 12;
  c.flight_time_s = 600;
  save_config(c, dir / "c.json");
  CHECK(load_config(dir / "c.json") == c);
  CHECK_THROWS_WITH_AS(load_config(dir / "missing.json"), doctest::Contains("missing.json"),
                       ConfigError);
  std::filesystem::remove_all(dir);
}
