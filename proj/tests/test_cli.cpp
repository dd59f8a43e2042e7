/* Copyright 2026 the fdadm authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "test_support.hpp"

namespace {

const std::string kTable1 = std::string(FDADM_SCENARIO_DIR) + "/table1.scn";

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (const char c : text)
    if (c == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("verify passes on the shipped scenario", "[cli]") {
  const std::filesystem::path log = "cli_verify.log";
  CHECK(testutil::run_cli("verify " + kTable1, log.string()) == 0);
  const std::string out = slurp(log);
  CHECK(out.find("all passed") != std::string::npos);
  CHECK(out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify passes off the design increment too", "[cli]") {
  // The checks are identities of the model, not of one parameter set: the
  // secure-spot check realigns its sampling instant from delta_f, so an
  // off-design increment still verifies.
  std::string text = slurp(kTable1);
  text.replace(text.find("delta_f = 10 khz"), 16, "delta_f = 13 khz");
  const std::filesystem::path scn = "cli_offdesign.scn";
  std::ofstream(scn) << text;
  const std::filesystem::path log = "cli_verify_offdesign.log";
  CHECK(testutil::run_cli("verify " + scn.string(), log.string()) == 0);
  CHECK(slurp(log).find("FAIL") == std::string::npos);
}

TEST_CASE("usage and io errors use distinct exit codes", "[cli]") {
  CHECK(testutil::run_cli("bogus") == 1);
  CHECK(testutil::run_cli("sweep " + kTable1) == 1);           // no --axis
  CHECK(testutil::run_cli("sweep does_not_exist.scn --axis range") == 3);
  CHECK(testutil::run_cli("demo-propagation " + kTable1) == 1);  // no --times
}

TEST_CASE("angle sweep localizes at the target direction", "[cli]") {
  const std::filesystem::path out = "cli_angle_out";
  std::filesystem::remove_all(out);
  const std::filesystem::path log = "cli_angle.log";
  REQUIRE(testutil::run_cli("sweep " + kTable1 + " --axis angle --out " + out.string(),
                            log.string()) == 0);
  CHECK(slurp(log).find("theta = 40.000000 deg") != std::string::npos);
  const std::string csv = slurp(out / "sweep_angle.csv");
  CHECK(count_lines(csv) == 722);  // header + 721 cells
  CHECK(csv.rfind("theta_deg,range_m,time_s,field_mag,field_phase_deg,evm,ser", 0) == 0);
}

TEST_CASE("demo-propagation reports the downrange clean spot", "[cli]") {
  const std::filesystem::path out = "cli_demo_out";
  std::filesystem::remove_all(out);
  const std::filesystem::path log = "cli_demo.log";
  REQUIRE(testutil::run_cli("demo-propagation " + kTable1 + " --times 0us,20us --out " +
                                out.string(),
                            log.string()) == 0);
  const std::string report = slurp(out / "propagation_report.txt");
  CHECK(report.find("t = 0 s: centroid_m = 30000") != std::string::npos);
  CHECK(report.find("centroid_m = 36000") != std::string::npos);
  CHECK(report.find("velocity fit skipped") != std::string::npos);
  CHECK(std::filesystem::exists(out / "propagation_t0.csv"));
  CHECK(std::filesystem::exists(out / "propagation_t1.csv"));
}

TEST_CASE("the symbols profile emits per-symbol field columns", "[cli]") {
  std::string text = slurp(kTable1);
  text.replace(text.find("profile = summary"), 17, "profile = symbols");
  text.replace(text.find("range = 15 km, 45 km, 3001"), 26, "range = 29.98 km, 30.02 km, 3");
  const std::filesystem::path scn = "cli_symbols.scn";
  std::ofstream(scn) << text;

  const std::filesystem::path out = "cli_symbols_out";
  std::filesystem::remove_all(out);
  REQUIRE(testutil::run_cli("sweep " + scn.string() + " --axis range --out " + out.string()) ==
          0);
  const std::string csv = slurp(out / "sweep_range.csv");
  CHECK(count_lines(csv) == 4);
  CHECK(csv.find("sym0_re,sym0_im") != std::string::npos);
  CHECK(csv.find("sym39_re,sym39_im") != std::string::npos);
}

TEST_CASE("the seed flag drives the symbol stream", "[cli]") {
  const std::filesystem::path out_a = "cli_seed_a";
  const std::filesystem::path out_b = "cli_seed_b";
  const std::filesystem::path out_c = "cli_seed_c";
  for (const auto& dir : {out_a, out_b, out_c}) std::filesystem::remove_all(dir);
  REQUIRE(testutil::run_cli("simulate " + kTable1 + " --seed 1 --out " + out_a.string()) == 0);
  REQUIRE(testutil::run_cli("simulate " + kTable1 + " --seed 2 --out " + out_b.string()) == 0);
  REQUIRE(testutil::run_cli("simulate " + kTable1 + " --seed 1 --out " + out_c.string()) == 0);
  CHECK(slurp(out_a / "constellation.csv") != slurp(out_b / "constellation.csv"));
  CHECK(slurp(out_a / "constellation.csv") == slurp(out_c / "constellation.csv"));
}
