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

#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "fdadm/scenario_file.hpp"

using namespace fdadm;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kMinimal =
    "[array]\n"
    "elements = 4\n"
    "spacing = 5 cm\n"
    "f0 = 1 ghz\n"
    "delta_f = 0 hz\n"
    "[scenario]\n"
    "theta0 = 90 deg\n"
    "range = 10 km\n"
    "p = 1\n"
    "q = 0\n"
    "symbols = 8\n";

}  // namespace

TEST_CASE("the shipped reference scenario parses to the reference values", "[scenario_file]") {
  const ParsedScenario ps = parse_scenario(read_file(FDADM_SCENARIO_DIR "/table1.scn"));
  CHECK(ps.array.n_elements == 10);
  CHECK(ps.array.spacing == 0.05);
  CHECK(ps.array.f0 == 3e9);
  CHECK(ps.array.delta_f == 1e4);
  CHECK(ps.scenario.theta0 == Catch::Approx(40.0 * std::numbers::pi / 180.0).epsilon(1e-15));
  CHECK(ps.scenario.range0 == 30e3);
  CHECK(ps.scenario.p == 0.5);
  CHECK(ps.scenario.q == 0.5);
  CHECK(ps.scenario.n_symbols == 40);
  CHECK(ps.scenario.constellation.name == "qpsk");
  REQUIRE(ps.scenario.symbol_period.has_value());
  CHECK(*ps.scenario.symbol_period == 1e-4);
  CHECK(ps.phase_mode == PhaseMode::DropQuadratic);
  CHECK(ps.c_mode == CMode::Paper);
  CHECK(ps.grid.theta.count == 721);
  CHECK(ps.grid.range.count == 3001);
  CHECK(ps.grid.range.start == 15e3);
  CHECK(ps.grid.range.stop == 45e3);
  CHECK(ps.grid.time.count == 1);
  CHECK(ps.receiver.kind == Integration::Kind::Instant);
  CHECK(ps.evm_threshold == 0.1);
  CHECK(ps.profile == OutputProfile::Summary);
  CHECK(ps.constants().c == 3e8);
}

TEST_CASE("an empty file lists every missing required key", "[scenario_file]") {
  try {
    parse_scenario("");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    for (const char* key :
         {"array.elements", "array.spacing", "array.f0", "array.delta_f", "scenario.theta0",
          "scenario.range", "scenario.p", "scenario.q", "scenario.symbols"})
      CHECK(what.find(key) != std::string::npos);
  }
}

TEST_CASE("zero frequency increment is a valid degenerate case", "[scenario_file]") {
  CHECK_NOTHROW(parse_scenario(kMinimal));
}

TEST_CASE("schema violations carry line numbers", "[scenario_file]") {
  const std::string with_unknown = std::string(kMinimal) + "bandwidth = 1 mhz\n";
  try {
    parse_scenario(with_unknown);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 12);
    CHECK(std::string(e.what()).find("unknown key 'bandwidth'") != std::string::npos);
  }

  std::string malformed = kMinimal;
  malformed.replace(malformed.find("elements = 4"), 12, "elements = 1..2");
  try {
    parse_scenario(malformed);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("malformed number") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_scenario("[rf]\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("elements = 3\n"), ParseError);  // key before section
  CHECK_THROWS_AS(parse_scenario(std::string(kMinimal) + "[array]\nelements = 4\n"),
                  ParseError);  // duplicate
}

TEST_CASE("unit mismatches are rejected", "[scenario_file]") {
  std::string bad = kMinimal;
  bad.replace(bad.find("f0 = 1 ghz"), 10, "f0 = 1 km ");
  CHECK_THROWS_WITH(parse_scenario(bad),
                    Catch::Matchers::ContainsSubstring("not a frequency unit"));

  bad = kMinimal;
  bad.replace(bad.find("p = 1"), 5, "p = 1 m");
  CHECK_THROWS_WITH(parse_scenario(bad), Catch::Matchers::ContainsSubstring("dimensionless"));

  bad = kMinimal;
  bad.replace(bad.find("range = 10 km"), 13, "range = 10   ");
  CHECK_THROWS_WITH(parse_scenario(bad), Catch::Matchers::ContainsSubstring("missing length"));
}

TEST_CASE("out-of-range target angles are rejected", "[scenario_file]") {
  std::string bad = kMinimal;
  bad.replace(bad.find("theta0 = 90 deg"), 15, "theta0 = 181 deg");
  CHECK_THROWS_WITH(parse_scenario(bad),
                    Catch::Matchers::ContainsSubstring("strictly between"));

  bad = kMinimal;
  bad.replace(bad.find("theta0 = 90 deg"), 15, "theta0 = 0 deg ");
  CHECK_THROWS_AS(parse_scenario(bad), ParseError);
}

TEST_CASE("decimal unit aliases land on the identical value", "[scenario_file]") {
  const auto delta_f_of = [](const char* text) {
    std::string scn = kMinimal;
    scn.replace(scn.find("delta_f = 0 hz"), 14, text);
    return parse_scenario(scn).array.delta_f;
  };
  const double reference = delta_f_of("delta_f = 10000 hz");
  CHECK(reference == 1e4);
  CHECK(delta_f_of("delta_f = 10 khz") == reference);
  CHECK(delta_f_of("delta_f = 0.00001 ghz") == reference);
  CHECK(delta_f_of("delta_f = 0.01 mhz") == reference);
}

TEST_CASE("parse then serialize then parse is the identity", "[scenario_file]") {
  RunSection run;
  const ParsedScenario first =
      parse_scenario(read_file(FDADM_SCENARIO_DIR "/table1.scn"), &run);
  CHECK(run.entries.empty());

  const std::string canonical = serialize_scenario(first);
  const ParsedScenario second = parse_scenario(canonical);

  CHECK(second.array.n_elements == first.array.n_elements);
  CHECK(second.array.spacing == first.array.spacing);
  CHECK(second.array.f0 == first.array.f0);
  CHECK(second.array.delta_f == first.array.delta_f);
  CHECK(second.taper_phases_deg == first.taper_phases_deg);
  CHECK(second.scenario.theta0 == first.scenario.theta0);
  CHECK(second.scenario.range0 == first.scenario.range0);
  CHECK(second.scenario.p == first.scenario.p);
  CHECK(second.scenario.q == first.scenario.q);
  CHECK(second.scenario.n_symbols == first.scenario.n_symbols);
  CHECK(second.scenario.constellation.name == first.scenario.constellation.name);
  CHECK(second.scenario.symbol_period == first.scenario.symbol_period);
  CHECK(second.phase_mode == first.phase_mode);
  CHECK(second.c_mode == first.c_mode);
  CHECK(second.profile == first.profile);
  CHECK(second.evm_threshold == first.evm_threshold);
  CHECK(second.receiver.kind == first.receiver.kind);
  CHECK(second.receiver.n_quad == first.receiver.n_quad);
  for (const auto& [axis_a, axis_b] :
       {std::pair{first.grid.theta, second.grid.theta},
        std::pair{first.grid.range, second.grid.range},
        std::pair{first.grid.time, second.grid.time}}) {
    CHECK(axis_a.start == axis_b.start);
    CHECK(axis_a.stop == axis_b.stop);
    CHECK(axis_a.count == axis_b.count);
  }

  // And the canonical form is a fixed point.
  CHECK(serialize_scenario(second) == canonical);
}

TEST_CASE("taper phases round-trip and build the taper", "[scenario_file]") {
  std::string scn = kMinimal;
  scn.insert(scn.find("[scenario]"), "taper_phase_deg = 0, 90, 180, 270\n");
  const ParsedScenario ps = parse_scenario(scn);
  REQUIRE(ps.array.taper.size() == 4);
  CHECK(std::abs(ps.array.taper[1] - std::complex<double>(0.0, 1.0)) < 1e-12);
  CHECK(std::abs(ps.array.taper[2] - std::complex<double>(-1.0, 0.0)) < 1e-12);

  const ParsedScenario replayed = parse_scenario(serialize_scenario(ps));
  CHECK(replayed.array.taper == ps.array.taper);

  std::string bad = kMinimal;
  bad.insert(bad.find("[scenario]"), "taper_phase_deg = 0, 90\n");
  CHECK_THROWS_WITH(parse_scenario(bad),
                    Catch::Matchers::ContainsSubstring("one phase per element"));
}

TEST_CASE("time lists parse with mixed units", "[scenario_file]") {
  const std::vector<double> times = parse_time_list("0us,2e-5 s,15 us");
  REQUIRE(times.size() == 3);
  CHECK(times[0] == 0.0);
  CHECK(times[1] == 2e-5);
  CHECK(times[2] == 1.5e-5);
}

TEST_CASE("manifest run section is read back", "[scenario_file]") {
  const std::string text = std::string(kMinimal) +
                           "[run]\n"
                           "tool = fdadm\n"
                           "subcommand = sweep\n"
                           "seed = 7\n"
                           "axis = range\n";
  RunSection run;
  CHECK_NOTHROW(parse_scenario(text, &run));
  REQUIRE(run.find("axis") != nullptr);
  CHECK(*run.find("axis") == "range");
  CHECK(*run.find("seed") == "7");
  CHECK(run.find("times") == nullptr);

  CHECK_THROWS_AS(parse_scenario(std::string(kMinimal) + "[run]\nhost = example\n"),
                  ParseError);
}
