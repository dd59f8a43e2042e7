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

// CSV output. Values are written in scientific notation with 17 significant
// digits so re-emission of the same result is byte-identical and parsing
// recovers the exact doubles. Row order is lexicographic in
// (time, range, theta) indices.

#pragma once

#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include "fdadm/receiver.hpp"
#include "fdadm/scenario_file.hpp"
#include "fdadm/sweep.hpp"

namespace fdadm {

inline std::string sci17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

inline double to_degrees(double radians) { return radians * 180.0 / std::numbers::pi; }

// summary profile: one aggregate row per cell. field_mag is the mean symbol
// field magnitude; field_phase_deg is the first symbol's field phase.
// symbols profile: per-symbol field re/im pairs instead of the aggregates.
inline void emit_sweep_csv(const SweepResult& result, OutputProfile profile,
                           std::ostream& os) {
  const std::size_t n_symbols = result.tx_symbols.size();
  os << "theta_deg,range_m,time_s";
  if (profile == OutputProfile::Summary) {
    os << ",field_mag,field_phase_deg,evm,ser";
  } else {
    for (std::size_t k = 0; k < n_symbols; ++k)
      os << ",sym" << k << "_re,sym" << k << "_im";
    os << ",evm,ser";
  }
  os << "\n";

  for (const CellResult& cell : result.cells) {
    os << sci17(to_degrees(cell.obs.theta)) << ',' << sci17(cell.obs.range) << ','
       << sci17(cell.obs.time);
    if (profile == OutputProfile::Summary) {
      double mag = 0.0;
      for (const auto& f : cell.fields) mag += std::abs(f);
      if (n_symbols) mag /= static_cast<double>(n_symbols);
      const double phase_deg =
          cell.fields.empty() ? 0.0 : to_degrees(std::arg(cell.fields.front()));
      os << ',' << sci17(mag) << ',' << sci17(phase_deg);
    } else {
      for (const auto& f : cell.fields)
        os << ',' << sci17(f.real()) << ',' << sci17(f.imag());
    }
    os << ',' << sci17(cell.metrics.evm_rms) << ',' << sci17(cell.metrics.ser) << "\n";
  }
}

// Per-symbol constellation at a single observation point: transmitted
// symbol, raw baseband, gain-normalized baseband, decision and correctness.
inline void emit_constellation_csv(const SymbolStream& stream, const LinkSamples& samples,
                                   const Constellation& constellation, double scale,
                                   std::ostream& os) {
  os << "symbol,tx_index,tx_re,tx_im,rx_re,rx_im,rx_norm_re,rx_norm_im,detected,error\n";
  const double divisor = scale > 0.0 ? scale : 1.0;
  for (std::size_t k = 0; k < stream.tx_symbols.size(); ++k) {
    const std::complex<double> rx = samples.basebands[k];
    const std::complex<double> norm = rx / divisor;
    const std::size_t detected = demodulate(rx, constellation, scale);
    os << k << ',' << stream.tx_indices[k] << ',' << sci17(stream.tx_symbols[k].real()) << ','
       << sci17(stream.tx_symbols[k].imag()) << ',' << sci17(rx.real()) << ','
       << sci17(rx.imag()) << ',' << sci17(norm.real()) << ',' << sci17(norm.imag()) << ','
       << detected << ',' << (detected != stream.tx_indices[k] ? 1 : 0) << "\n";
  }
}

inline void emit_residual_noise_csv(const std::vector<std::pair<double, MetricReport>>& rows,
                                    std::ostream& os) {
  os << "period_s,evm,ser,residual_noise_power\n";
  for (const auto& [period, report] : rows)
    os << sci17(period) << ',' << sci17(report.evm_rms) << ',' << sci17(report.ser) << ','
       << sci17(report.residual_noise_power) << "\n";
}

}  // namespace fdadm
