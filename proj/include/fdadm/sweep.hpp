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

// Grid evaluation over angle/range/time, secure-region extraction by EVM
// threshold, and the propagation-velocity fit of the region centroid. Every
// cell observes the SAME symbol and noise stream, so cross-cell differences
// are purely geometric.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "fdadm/error.hpp"
#include "fdadm/fda.hpp"
#include "fdadm/model.hpp"
#include "fdadm/receiver.hpp"

namespace fdadm {

struct Axis {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  double value(std::size_t i) const {
    if (count <= 1) return start;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
  }

  double step() const {
    return count <= 1 ? 0.0 : (stop - start) / static_cast<double>(count - 1);
  }

  void validate(const char* name) const {
    if (count < 1) throw Error(std::string(name) + " axis needs count >= 1");
    if (!(start <= stop)) throw Error(std::string(name) + " axis needs start <= stop");
    if (count == 1 && start != stop)
      throw Error(std::string(name) + " axis with count 1 must have start == stop");
  }
};

struct GridSpec {
  Axis theta;  // rad
  Axis range;  // m
  Axis time;   // s

  std::size_t cell_count() const { return theta.count * range.count * time.count; }

  void validate() const {
    theta.validate("theta");
    range.validate("range");
    time.validate("time");
    if (!(range.start > 0.0)) throw Error("range axis must start above 0");
  }
};

struct CellResult {
  ObservationPoint obs;
  std::vector<std::complex<double>> fields;     // per symbol
  std::vector<std::complex<double>> basebands;  // per symbol
  MetricReport metrics;
};

struct SweepResult {
  GridSpec grid;
  PhaseMode mode = PhaseMode::DropQuadratic;
  std::uint64_t seed = 0;
  std::vector<std::size_t> tx_indices;
  std::vector<std::complex<double>> tx_symbols;
  // Lexicographic in (time, range, theta) indices.
  std::vector<CellResult> cells;

  std::size_t cell_index(std::size_t ti, std::size_t ri, std::size_t hi) const {
    return (ti * grid.range.count + ri) * grid.theta.count + hi;
  }
};

// Instant-sampling link metrics at every grid cell, one shared symbol/noise
// stream across all cells.
inline SweepResult sweep(const ArrayConfig& cfg, const Scenario& scn, const GridSpec& grid,
                         PhaseMode mode, const PhysicalConstants& pc) {
  grid.validate();
  const SymbolStream stream = make_symbol_stream(cfg, scn, pc);

  SweepResult result;
  result.grid = grid;
  result.mode = mode;
  result.seed = scn.seed;
  result.tx_indices = stream.tx_indices;
  result.tx_symbols = stream.tx_symbols;
  result.cells.reserve(grid.cell_count());

  const Integration instant{Integration::Kind::Instant, 64};
  for (std::size_t ti = 0; ti < grid.time.count; ++ti) {
    for (std::size_t ri = 0; ri < grid.range.count; ++ri) {
      for (std::size_t hi = 0; hi < grid.theta.count; ++hi) {
        const ObservationPoint obs{grid.theta.value(hi), grid.range.value(ri),
                                   grid.time.value(ti)};
        LinkSamples samples = evaluate_stream(cfg, scn, stream, obs, mode, instant, pc);
        result.cells.push_back(CellResult{obs, std::move(samples.fields),
                                          std::move(samples.basebands), samples.metrics});
      }
    }
  }
  return result;
}

// Per-time-slice footprint of the region along the profile axis (range when
// swept, otherwise theta): the maximal contiguous EVM<=threshold run around
// the slice's EVM minimum.
struct SliceStats {
  bool empty = true;
  bool full_axis = false;
  std::size_t run_first = 0;
  std::size_t run_length = 0;
  double centroid = 0.0;  // profile-axis coordinate
  double extent = 0.0;    // span of run cell centers
};

struct SecureRegionMask {
  double threshold = 0.0;
  std::vector<bool> cells;  // parallel to SweepResult.cells
  std::vector<SliceStats> slices;  // one per time index
};

inline SecureRegionMask secure_region(const SweepResult& result, double evm_threshold) {
  if (!(evm_threshold > 0.0)) throw Error("EVM threshold must be positive");
  const GridSpec& grid = result.grid;
  SecureRegionMask mask;
  mask.threshold = evm_threshold;
  mask.cells.resize(result.cells.size());
  for (std::size_t i = 0; i < result.cells.size(); ++i)
    mask.cells[i] = result.cells[i].metrics.evm_rms <= evm_threshold;

  const bool range_profile = grid.range.count > 1;
  const Axis& axis = range_profile ? grid.range : grid.theta;
  mask.slices.resize(grid.time.count);

  for (std::size_t ti = 0; ti < grid.time.count; ++ti) {
    const auto at = [&](std::size_t k) {
      return range_profile ? result.cell_index(ti, k, 0) : result.cell_index(ti, 0, k);
    };
    std::size_t best = 0;
    for (std::size_t k = 1; k < axis.count; ++k)
      if (result.cells[at(k)].metrics.evm_rms < result.cells[at(best)].metrics.evm_rms)
        best = k;

    SliceStats stats;
    if (mask.cells[at(best)]) {
      std::size_t lo = best;
      while (lo > 0 && mask.cells[at(lo - 1)]) --lo;
      std::size_t hi = best;
      while (hi + 1 < axis.count && mask.cells[at(hi + 1)]) ++hi;
      stats.empty = false;
      stats.full_axis = (lo == 0 && hi + 1 == axis.count);
      stats.run_first = lo;
      stats.run_length = hi - lo + 1;
      double sum = 0.0;
      for (std::size_t k = lo; k <= hi; ++k) sum += axis.value(k);
      stats.centroid = sum / static_cast<double>(stats.run_length);
      stats.extent = axis.value(hi) - axis.value(lo);
    }
    mask.slices[ti] = stats;
  }
  return mask;
}

inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw RegionError("velocity fit is degenerate: no time spread");
  return sxy / sxx;
}

// Least-squares slope of the secure-region centroid range against time.
// Needs at least 5 slices, a nonempty region in every slice, and a region
// that does not fill the whole range axis.
inline double region_velocity(const ArrayConfig& cfg, const Scenario& scn,
                              const Axis& range_axis, const Axis& time_axis,
                              double evm_threshold, PhaseMode mode,
                              const PhysicalConstants& pc) {
  if (time_axis.count < 5) throw Error("region velocity needs at least 5 time slices");
  if (range_axis.count < 2) throw Error("region velocity needs a swept range axis");

  GridSpec grid;
  grid.theta = Axis{scn.theta0, scn.theta0, 1};
  grid.range = range_axis;
  grid.time = time_axis;

  const SweepResult result = sweep(cfg, scn, grid, mode, pc);
  const SecureRegionMask mask = secure_region(result, evm_threshold);

  std::vector<double> times, centroids;
  for (std::size_t ti = 0; ti < time_axis.count; ++ti) {
    const SliceStats& s = mask.slices[ti];
    if (s.empty) throw RegionError("region lost: no cell under threshold at a time slice");
    if (s.full_axis)
      throw RegionError("degenerate region: mask covers the entire range axis");
    times.push_back(time_axis.value(ti));
    centroids.push_back(s.centroid);
  }
  return fit_slope(times, centroids);
}

}  // namespace fdadm
