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

// Command-line front end: scenario loading, sweeps, figure-style CSV dumps,
// the analytic verification suite, and run manifests.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure,
// 3 I/O failure.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdadm/csv.hpp"
#include "fdadm/manifest.hpp"
#include "fdadm/scenario_file.hpp"
#include "fdadm/version.hpp"

namespace {

using namespace fdadm;

struct CommonFlags {
  std::string scenario_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string phase_mode;  // "", "exact", "approx"
  std::string c_mode;      // "", "si", "paper"
  double evm_threshold = 0.0;
  bool evm_threshold_given = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

struct LoadedRun {
  ParsedScenario scenario;
  RunSection run;
};

// Flag > manifest [run] value > scenario-file value > default.
LoadedRun load(const CommonFlags& flags) {
  LoadedRun loaded;
  loaded.scenario = parse_scenario(read_file(flags.scenario_path), &loaded.run);

  if (flags.seed_given) {
    loaded.scenario.scenario.seed = flags.seed;
  } else if (const std::string* s = loaded.run.find("seed")) {
    loaded.scenario.scenario.seed = std::stoull(*s);
  }
  if (flags.phase_mode == "exact") loaded.scenario.phase_mode = PhaseMode::Exact;
  if (flags.phase_mode == "approx") loaded.scenario.phase_mode = PhaseMode::DropQuadratic;
  if (flags.c_mode == "si") loaded.scenario.c_mode = CMode::Si;
  if (flags.c_mode == "paper") loaded.scenario.c_mode = CMode::Paper;
  if (flags.evm_threshold_given) loaded.scenario.evm_threshold = flags.evm_threshold;
  return loaded;
}

void print_warnings(const ParsedScenario& ps) {
  const double min_range = std::min(ps.grid.range.start, ps.scenario.range0);
  for (const auto& warning :
       config_diagnostics(ps.array, ps.constants(), min_range))
    std::cerr << "warning: " << warning << "\n";
}

std::filesystem::path ensure_out_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "'");
  return p;
}

RunManifest make_manifest(const ParsedScenario& ps, const std::string& subcommand,
                          std::vector<std::pair<std::string, std::string>> args) {
  RunManifest m;
  m.resolved = ps;
  m.subcommand = subcommand;
  m.seed = ps.scenario.seed;
  m.args = std::move(args);
  return m;
}

std::string format_time_list(const std::vector<double>& times) {
  std::string out;
  for (std::size_t i = 0; i < times.size(); ++i)
    out += (i ? "," : "") + detail::g17(times[i]) + " s";
  return out;
}

// ---------------------------------------------------------------------------
// simulate

int run_simulate(const CommonFlags& flags) {
  LoadedRun loaded = load(flags);
  const ParsedScenario& ps = loaded.scenario;
  print_warnings(ps);

  const PhysicalConstants pc = ps.constants();
  const double time = ps.grid.time.count == 1 ? ps.grid.time.start : 0.0;
  const ObservationPoint obs{ps.scenario.theta0, ps.scenario.range0, time};

  const SymbolStream stream = make_symbol_stream(ps.array, ps.scenario, pc);
  const LinkSamples samples =
      evaluate_stream(ps.array, ps.scenario, stream, obs, ps.phase_mode, ps.receiver, pc);

  const MetricReport& m = samples.metrics;
  std::printf("observation: theta = %.6f deg, range = %.6f m, time = %.9e s\n",
              to_degrees(obs.theta), obs.range, obs.time);
  std::printf("evm_rms = %.6e\n", m.evm_rms);
  std::printf("ser = %.6e (%zu of %zu symbols wrong)\n", m.ser, m.n_symbol_errors,
              m.n_symbols);
  std::printf("residual_noise_power = %.6e\n", m.residual_noise_power);

  const auto out = ensure_out_dir(flags.out_dir);
  const double scale = ps.scenario.p * static_cast<double>(ps.array.n_elements);
  std::ostringstream csv;
  emit_constellation_csv(stream, samples, ps.scenario.constellation, scale, csv);
  write_file(out / "constellation.csv", csv.str());
  write_file(out / "simulate.manifest", serialize_manifest(make_manifest(ps, "simulate", {})));
  std::printf("wrote %s and %s\n", (out / "constellation.csv").c_str(),
              (out / "simulate.manifest").c_str());
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

int run_sweep(const CommonFlags& flags, std::string axis) {
  LoadedRun loaded = load(flags);
  ParsedScenario& ps = loaded.scenario;
  if (axis.empty()) {
    if (const std::string* a = loaded.run.find("axis")) axis = *a;
  }
  if (axis != "angle" && axis != "range" && axis != "time")
    throw Error("sweep needs --axis angle|range|time");
  print_warnings(ps);

  // The swept axis comes from [grid]; the others are pinned at the secure
  // coordinate (and at the [grid] time when it is fixed).
  const double fixed_time = ps.grid.time.count == 1 ? ps.grid.time.start : 0.0;
  GridSpec grid;
  grid.theta = Axis{ps.scenario.theta0, ps.scenario.theta0, 1};
  grid.range = Axis{ps.scenario.range0, ps.scenario.range0, 1};
  grid.time = Axis{fixed_time, fixed_time, 1};
  if (axis == "angle") {
    if (ps.grid.theta.count < 2) throw Error("grid theta axis needs count >= 2 to sweep angle");
    grid.theta = ps.grid.theta;
  } else if (axis == "range") {
    if (ps.grid.range.count < 2) throw Error("grid range axis needs count >= 2 to sweep range");
    grid.range = ps.grid.range;
  } else {
    if (ps.grid.time.count < 2) throw Error("grid time axis needs count >= 2 to sweep time");
    grid.time = ps.grid.time;
  }

  const PhysicalConstants pc = ps.constants();
  const SweepResult result = sweep(ps.array, ps.scenario, grid, ps.phase_mode, pc);

  std::size_t best = 0;
  for (std::size_t i = 1; i < result.cells.size(); ++i)
    if (result.cells[i].metrics.evm_rms < result.cells[best].metrics.evm_rms) best = i;
  const CellResult& best_cell = result.cells[best];
  std::printf("cells: %zu, best evm = %.6e at theta = %.6f deg, range = %.6f m, t = %.9e s "
              "(ser %.6e)\n",
              result.cells.size(), best_cell.metrics.evm_rms, to_degrees(best_cell.obs.theta),
              best_cell.obs.range, best_cell.obs.time, best_cell.metrics.ser);

  const auto out = ensure_out_dir(flags.out_dir);
  std::ostringstream csv;
  emit_sweep_csv(result, ps.profile, csv);
  const std::string base = "sweep_" + axis;
  write_file(out / (base + ".csv"), csv.str());
  write_file(out / (base + ".manifest"),
             serialize_manifest(make_manifest(ps, "sweep", {{"axis", axis}})));
  std::printf("wrote %s and %s\n", (out / (base + ".csv")).c_str(),
              (out / (base + ".manifest")).c_str());
  return 0;
}

// ---------------------------------------------------------------------------
// demo-propagation

int run_demo_propagation(const CommonFlags& flags, std::string times_text) {
  LoadedRun loaded = load(flags);
  ParsedScenario& ps = loaded.scenario;
  if (times_text.empty()) {
    if (const std::string* t = loaded.run.find("times")) times_text = *t;
  }
  if (times_text.empty()) throw Error("demo-propagation needs --times t1,t2,...");
  const std::vector<double> times = parse_time_list(times_text);
  if (ps.grid.range.count < 2) throw Error("demo-propagation needs a swept grid range axis");
  print_warnings(ps);

  const PhysicalConstants pc = ps.constants();
  const auto out = ensure_out_dir(flags.out_dir);
  std::ostringstream report;

  std::vector<double> centroids;
  bool regions_ok = true;
  for (std::size_t k = 0; k < times.size(); ++k) {
    GridSpec grid;
    grid.theta = Axis{ps.scenario.theta0, ps.scenario.theta0, 1};
    grid.range = ps.grid.range;
    grid.time = Axis{times[k], times[k], 1};
    const SweepResult result = sweep(ps.array, ps.scenario, grid, ps.phase_mode, pc);
    const SecureRegionMask mask = secure_region(result, ps.evm_threshold);
    const SliceStats& stats = mask.slices.front();

    std::ostringstream csv;
    emit_sweep_csv(result, ps.profile, csv);
    write_file(out / ("propagation_t" + std::to_string(k) + ".csv"), csv.str());

    char line[256];
    if (stats.empty) {
      std::snprintf(line, sizeof line,
                    "t = %s s: region lost (no cell under evm threshold %.3g)\n",
                    detail::g17(times[k]).c_str(), ps.evm_threshold);
      regions_ok = false;
    } else {
      std::snprintf(line, sizeof line,
                    "t = %s s: centroid_m = %s, extent_m = %s, cells = %zu%s\n",
                    detail::g17(times[k]).c_str(), detail::g17(stats.centroid).c_str(),
                    detail::g17(stats.extent).c_str(), stats.run_length,
                    stats.full_axis ? " (degenerate: full axis)" : "");
      if (stats.full_axis) regions_ok = false;
      centroids.push_back(stats.centroid);
    }
    report << line;
    std::fputs(line, stdout);
  }

  if (times.size() >= 5 && regions_ok) {
    const double velocity = fit_slope(times, centroids);
    char line[256];
    std::snprintf(line, sizeof line,
                  "estimated_velocity_mps = %s (c = %s, ratio = %.9f)\n",
                  detail::g17(velocity).c_str(), detail::g17(pc.c).c_str(), velocity / pc.c);
    report << line;
    std::fputs(line, stdout);
  } else if (times.size() < 5) {
    const char* note = "velocity fit skipped: needs at least 5 time slices\n";
    report << note;
    std::fputs(note, stdout);
  } else {
    throw RegionError("velocity fit impossible: region lost or degenerate in some slice");
  }

  write_file(out / "propagation_report.txt", report.str());
  write_file(out / "propagation.manifest",
             serialize_manifest(
                 make_manifest(ps, "demo-propagation", {{"times", format_time_list(times)}})));
  return 0;
}

// ---------------------------------------------------------------------------
// residual-noise

int run_residual_noise(const CommonFlags& flags, std::string periods_text) {
  LoadedRun loaded = load(flags);
  ParsedScenario& ps = loaded.scenario;
  if (periods_text.empty()) {
    if (const std::string* p = loaded.run.find("periods")) periods_text = *p;
  }
  if (periods_text.empty()) throw Error("residual-noise needs --periods T1,T2,...");
  const std::vector<double> periods = parse_time_list(periods_text);
  print_warnings(ps);

  const PhysicalConstants pc = ps.constants();
  const double time = ps.grid.time.count == 1 ? ps.grid.time.start : 0.0;
  const ObservationPoint obs{ps.scenario.theta0, ps.scenario.range0, time};

  std::vector<std::pair<double, MetricReport>> rows;
  std::printf("%-16s %-16s %-12s %-16s\n", "period_s", "evm", "ser", "residual_power");
  for (const double period : periods) {
    Scenario scn = ps.scenario;
    scn.symbol_period = period;
    const Integration integration{Integration::Kind::OverT, ps.receiver.n_quad};
    const MetricReport report =
        evaluate_link(ps.array, scn, obs, ps.phase_mode, integration, pc);
    std::printf("%-16.6e %-16.6e %-12.6e %-16.6e\n", period, report.evm_rms, report.ser,
                report.residual_noise_power);
    rows.emplace_back(period, report);
  }

  const auto out = ensure_out_dir(flags.out_dir);
  std::ostringstream csv;
  emit_residual_noise_csv(rows, csv);
  write_file(out / "residual_noise.csv", csv.str());
  write_file(out / "residual_noise.manifest",
             serialize_manifest(make_manifest(
                 ps, "residual-noise", {{"periods", format_time_list(periods)}})));
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

int run_verify(const CommonFlags& flags) {
  LoadedRun loaded = load(flags);
  const ParsedScenario& ps = loaded.scenario;
  print_warnings(ps);

  const PhysicalConstants pc = ps.constants();
  const ArrayConfig& cfg = ps.array;
  const Scenario& scn = ps.scenario;
  const std::size_t n = cfg.n_elements;
  const double clean_gain = scn.p * static_cast<double>(n);
  const SymbolStream stream = make_symbol_stream(cfg, scn, pc);
  std::vector<Check> checks;

  // Narrowband DM field at the target direction: p*N*D after carrier strip.
  {
    ArrayConfig narrow = cfg;
    narrow.delta_f = 0.0;
    const ObservationPoint obs{scn.theta0, scn.range0, 0.0};
    double worst = 0.0;
    for (std::size_t k = 0; k < stream.tx_symbols.size(); ++k) {
      const std::complex<double> field =
          dm_field(narrow, stream.excitations[k], obs, pc);
      const std::complex<double> baseband = downconvert_instant(field, obs, narrow.f0, pc);
      worst = std::max(worst,
                       std::abs(baseband - clean_gain * stream.tx_symbols[k]));
    }
    checks.push_back({"dm-target-field", worst, 1e-10 * std::max(clean_gain, 1.0),
                      worst <= 1e-10 * std::max(clean_gain, 1.0)});
  }

  // Secure-spot sampling instant: the nearest time at which the frequency
  // ladder realigns at (theta0, range0).
  const double design_time =
      cfg.delta_f != 0.0
          ? scn.range0 / pc.c - std::round(cfg.delta_f * scn.range0 / pc.c) / cfg.delta_f
          : 0.0;
  const ObservationPoint spot{scn.theta0, scn.range0, design_time};

  {
    double worst = 0.0;
    for (std::size_t k = 0; k < stream.tx_symbols.size(); ++k) {
      const std::complex<double> field =
          fda_field(cfg, stream.excitations[k].entries, spot, ps.phase_mode, pc);
      const std::complex<double> baseband = downconvert_instant(field, spot, cfg.f0, pc);
      worst = std::max(worst, std::abs(baseband - clean_gain * stream.tx_symbols[k]));
    }
    checks.push_back({"secure-spot-baseband", worst, 1e-9, worst <= 1e-9});
  }

  {
    Scenario noise_only = scn;
    noise_only.p = 0.0;
    double worst = 0.0;
    for (std::size_t k = 0; k < stream.tx_symbols.size(); ++k) {
      const std::complex<double> field = fda_dm_field(
          cfg, noise_only, stream.tx_symbols[k], stream.noise[k], spot, ps.phase_mode, pc);
      worst = std::max(worst, std::abs(field));
    }
    checks.push_back({"artificial-noise-null", worst, 1e-12, worst <= 1e-12});
  }

  // Peak beamforming gain N at aligned-phase points.
  {
    const std::vector<std::complex<double>> unit(n, {1.0, 0.0});
    double worst = 0.0;
    if (cfg.delta_f != 0.0) {
      for (const long z : {-2L, -1L, 0L, 1L}) {
        const double time = 1e-6;
        const double r = peak_locus_range(cfg, scn.theta0, time, z, pc);
        if (r <= 0.0) continue;
        const std::complex<double> field =
            fda_field(cfg, unit, {scn.theta0, r, time}, PhaseMode::DropQuadratic, pc);
        worst = std::max(worst, std::abs(std::abs(field) - static_cast<double>(n)));
      }
    } else {
      const std::complex<double> field = fda_field(
          cfg, unit, {std::numbers::pi / 2, scn.range0, 0.0}, PhaseMode::DropQuadratic, pc);
      worst = std::abs(std::abs(field) - static_cast<double>(n));
    }
    checks.push_back({"beam-peak-gain", worst, 1e-9, worst <= 1e-9});
  }

  // Dropped quadratic term: report the closed-form bound and verify the two
  // phase modes stay within the corresponding field-level bound.
  {
    const double bound_deg = quadratic_phase_bound_deg(cfg, pc);
    double field_bound = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      field_bound += 2.0 * std::numbers::pi * static_cast<double>(k * k) *
                     std::abs(cfg.delta_f) * cfg.spacing / pc.c;
    CounterRng rng(11, 0x76657279);
    double worst = 0.0;
    const std::vector<std::complex<double>> unit(n, {1.0, 0.0});
    for (int trial = 0; trial < 300; ++trial) {
      const ObservationPoint obs{rng.uniform() * std::numbers::pi,
                                 1e3 + rng.uniform() * 1e5, rng.uniform() * 1e-4};
      const std::complex<double> exact = fda_field(cfg, unit, obs, PhaseMode::Exact, pc);
      const std::complex<double> approx =
          fda_field(cfg, unit, obs, PhaseMode::DropQuadratic, pc);
      worst = std::max(worst, std::abs(exact - approx));
    }
    std::printf("info: quadratic-term bound = %.6f deg\n", bound_deg);
    checks.push_back(
        {"quadratic-term-bound", worst, field_bound + 1e-9, worst <= field_bound + 1e-9});
  }

  // Field invariance under (r, t) -> (r + c*tau, t + tau).
  {
    CounterRng rng(17, 0x76657279);
    double worst = 0.0;
    std::vector<std::complex<double>> exc(n);
    for (int trial = 0; trial < 200; ++trial) {
      for (auto& g : exc) g = rng.complex_gaussian();
      // Dyadic grids with dyadic anchors keep r + c*tau and t + tau exact.
      const double range_grid = 0x1.0p-10, time_grid = 0x1.0p-40;
      const double r = 1e3 + static_cast<double>(rng.uniform_below(1 << 27)) * range_grid;
      const double t =
          static_cast<double>(rng.uniform_below(1 << 27)) * time_grid - 0x1.0p-14;
      const double tau =
          static_cast<double>(rng.uniform_below(1 << 27)) * time_grid - 0x1.0p-14;
      for (const PhaseMode mode : {PhaseMode::Exact, PhaseMode::DropQuadratic}) {
        const std::complex<double> a = fda_field(cfg, exc, {scn.theta0, r, t}, mode, pc);
        const std::complex<double> b =
            fda_field(cfg, exc, {scn.theta0, r + pc.c * tau, t + tau}, mode, pc);
        worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(a)));
      }
    }
    checks.push_back({"propagation-invariance", worst, 1e-10, worst <= 1e-10});
  }

  // delta_f = 0: the noise term has no range structure, and none at all at
  // the target direction.
  {
    ArrayConfig narrow = cfg;
    narrow.delta_f = 0.0;
    Scenario noise_only = scn;
    noise_only.p = 0.0;
    double worst = 0.0;
    const double theta_off = scn.theta0 * 0.75;
    std::complex<double> reference;
    for (int i = 0; i < 8; ++i) {
      const double r = 1e3 + 7.3e3 * i;
      const ObservationPoint obs{theta_off, r, 0.0};
      const std::complex<double> field = fda_dm_field(narrow, noise_only, stream.tx_symbols[0],
                                                      stream.noise[0], obs, ps.phase_mode, pc);
      const std::complex<double> baseband = downconvert_instant(field, obs, narrow.f0, pc);
      if (i == 0)
        reference = baseband;
      else
        worst = std::max(worst, std::abs(baseband - reference));
      const ObservationPoint at_target{scn.theta0, r, 0.0};
      const std::complex<double> target_field =
          fda_dm_field(narrow, noise_only, stream.tx_symbols[0], stream.noise[0], at_target,
                       ps.phase_mode, pc);
      worst = std::max(worst, std::abs(target_field));
    }
    checks.push_back({"static-noise-when-df-zero", worst, 1e-12, worst <= 1e-12});
  }

  // q = 0: the noise sum vanishes identically, whatever the draw.
  {
    Scenario info_only = scn;
    info_only.q = 0.0;
    CounterRng rng(23, 0x76657279);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const ObservationPoint obs{rng.uniform() * std::numbers::pi,
                                 1e3 + rng.uniform() * 1e5, rng.uniform() * 1e-4};
      const NoiseVector& w = stream.noise[trial % stream.noise.size()];
      const std::complex<double> with_draw =
          fda_dm_field(cfg, info_only, stream.tx_symbols[0], w, obs, ps.phase_mode, pc);
      const NoiseVector zero{std::vector<std::complex<double>>(n, {0.0, 0.0}), 0};
      const std::complex<double> without =
          fda_dm_field(cfg, info_only, stream.tx_symbols[0], zero, obs, ps.phase_mode, pc);
      worst = std::max(worst, std::abs(with_draw - without));
    }
    checks.push_back({"no-noise-when-q-zero", worst, 1e-12, worst <= 1e-12});
  }

  bool all_pass = true;
  for (const Check& check : checks) {
    std::printf("%-4s %-28s residual %.3e (tol %.3e)\n", check.pass ? "PASS" : "FAIL",
                check.name.c_str(), check.residual, check.tolerance);
    all_pass = all_pass && check.pass;
  }
  std::printf("%zu checks, %s\n", checks.size(), all_pass ? "all passed" : "FAILURES present");
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fdadm: transmit-array physical-layer security simulator"};
  app.set_version_flag("--version", std::string(fdadm::kVersion));
  app.require_subcommand(1);

  CommonFlags flags;
  std::string axis, times_text, periods_text;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("scenario", flags.scenario_path, "scenario or manifest file")->required();
    cmd->add_option("--out", flags.out_dir, "output directory (default .)");
    cmd->add_option("--seed", flags.seed, "random seed (default 0)")
        ->each([&](const std::string&) { flags.seed_given = true; });
    cmd->add_option("--phase-mode", flags.phase_mode, "exact|approx")
        ->check(CLI::IsMember({"exact", "approx"}));
    cmd->add_option("--c-mode", flags.c_mode, "si|paper")
        ->check(CLI::IsMember({"si", "paper"}));
    cmd->add_option("--evm-threshold", flags.evm_threshold, "secure-region EVM bound")
        ->each([&](const std::string&) { flags.evm_threshold_given = true; });
  };

  CLI::App* simulate = app.add_subcommand(
      "simulate", "metrics and constellation at the secure coordinate");
  add_common(simulate);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "grid sweep along one axis, CSV output");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--axis", axis, "angle|range|time")
      ->check(CLI::IsMember({"angle", "range", "time"}));

  CLI::App* demo = app.add_subcommand(
      "demo-propagation", "range profiles at several instants plus region velocity");
  add_common(demo);
  demo->add_option("--times", times_text, "comma list, e.g. 0us,5us,10us,15us,20us");

  CLI::App* residual = app.add_subcommand(
      "residual-noise", "EVM at the secure spot versus integration period");
  add_common(residual);
  residual->add_option("--periods", periods_text, "comma list, e.g. 10ns,100ns,1us,10us");

  CLI::App* verify =
      app.add_subcommand("verify", "analytic check suite; nonzero exit on failure");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForVersion")
      return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (simulate->parsed()) return run_simulate(flags);
    if (sweep_cmd->parsed()) return run_sweep(flags, axis);
    if (demo->parsed()) return run_demo_propagation(flags, times_text);
    if (residual->parsed()) return run_residual_noise(flags, periods_text);
    if (verify->parsed()) return run_verify(flags);
  } catch (const fdadm::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const fdadm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
