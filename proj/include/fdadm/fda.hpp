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

// Frequency-diverse-array far field over (angle, range, time), path loss
// normalized out. Element n radiates at f0 + n*delta_f; its phase is
//
//   f_n * (t - r/c) + f_n * n * d * cos(theta) / c        [cycles]
//
// where the second term splits into a carrier part f0*n*d*cos(theta)/c and a
// quadratic part n^2*delta_f*d*cos(theta)/c. DropQuadratic omits the
// quadratic part, which stays below a small closed-form bound for practical
// configurations (see quadratic_phase_bound_deg). Every term depends on
// (t, r) only through t - r/c, so the whole field is invariant under
// (r, t) -> (r + c*tau, t + tau).

#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "fdadm/dm.hpp"
#include "fdadm/error.hpp"
#include "fdadm/model.hpp"
#include "fdadm/phase.hpp"

namespace fdadm {

enum class PhaseMode { Exact, DropQuadratic };

inline const char* to_string(PhaseMode mode) {
  return mode == PhaseMode::Exact ? "exact" : "approx";
}

inline ComplexField fda_field(const ArrayConfig& cfg,
                                      std::span<const std::complex<double>> excitation,
                                      const ObservationPoint& obs, PhaseMode mode,
                                      const PhysicalConstants& pc) {
  if (excitation.size() != cfg.n_elements)
    throw Error("excitation length must equal the element count");

  const PropagationTime w = propagation_time(obs.time, obs.range, pc.c);
  const double step = element_step_cycles(cfg, obs.theta, pc);
  const double quad_step =
      mode == PhaseMode::Exact ? cfg.delta_f * cfg.spacing * std::cos(obs.theta) / pc.c : 0.0;

  std::complex<double> acc = 0.0;
  for (std::size_t n = 0; n < cfg.n_elements; ++n) {
    const double k = static_cast<double>(n);
    const double f_n = cfg.f0 + k * cfg.delta_f;
    const double geometry_cycles = std::fmod(k * step, 1.0) + k * k * quad_step;
    acc += excitation[n] * unit_phasor(cycle_fraction(f_n, w, geometry_cycles));
  }
  return acc;
}

// Field radiated by the full DM excitation (information beam plus artificial
// noise) on the frequency ladder.
inline ComplexField fda_dm_field(const ArrayConfig& cfg, const Scenario& scn,
                                         std::complex<double> d_sym, const NoiseVector& w,
                                         const ObservationPoint& obs, PhaseMode mode,
                                         const PhysicalConstants& pc) {
  const ChannelVector h0 = steering_vector(cfg, scn.theta0, pc);
  const ExcitationVector exc = synthesize_excitation(scn, h0, d_sym, w);
  return fda_field(cfg, exc.entries, obs, mode, pc);
}

// Range of the peak locus with index z at direction theta and instant t:
// the solution of f0*d*cos(theta)/c - delta_f*r/c + delta_f*t = z. May be
// negative; the caller filters nonphysical values.
inline double peak_locus_range(const ArrayConfig& cfg, double theta, double time, long z,
                               const PhysicalConstants& pc) {
  if (cfg.delta_f == 0.0)
    throw Error("peaks are range-independent when delta_f == 0");
  const double lhs = cfg.f0 * cfg.spacing * std::cos(theta) / pc.c + cfg.delta_f * time -
                     static_cast<double>(z);
  return lhs * pc.c / cfg.delta_f;
}

// Largest phase, in degrees, that DropQuadratic discards over all elements
// and directions: 360 * (N-1)^2 * |delta_f| * d / c.
inline double quadratic_phase_bound_deg(const ArrayConfig& cfg, const PhysicalConstants& pc) {
  const double k = static_cast<double>(cfg.n_elements - 1);
  return 360.0 * k * k * std::abs(cfg.delta_f) * cfg.spacing / pc.c;
}

}  // namespace fdadm
