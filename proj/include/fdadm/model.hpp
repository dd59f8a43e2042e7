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

// Shared domain types: array geometry, transmission scenario, observation
// coordinates, carrier ladder and steering vectors. All types are immutable
// value types after construction; all operations are pure.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "fdadm/constants.hpp"
#include "fdadm/error.hpp"
#include "fdadm/phase.hpp"

namespace fdadm {

// Far-field sample, path loss normalized out.
using ComplexField = std::complex<double>;

using ChannelVector = std::vector<std::complex<double>>;

// Uniform linear transmit array with a linear carrier increment delta_f
// (0 = ordinary phased array). The taper is the per-element unit-modulus
// drive a uniformly excited array radiates with; excitation vectors handed
// to the field evaluators replace it outright, so it enters only through
// uniform_excitation.
struct ArrayConfig {
  std::size_t n_elements = 1;
  double spacing = 0.0;  // m
  double f0 = 0.0;       // Hz
  double delta_f = 0.0;  // Hz
  std::vector<std::complex<double>> taper;  // empty = all ones

  void validate() const {
    if (n_elements < 1) throw Error("array.elements must be at least 1");
    if (!(spacing > 0.0)) throw Error("array.spacing must be positive");
    if (!(f0 > 0.0)) throw Error("array.f0 must be positive");
    if (!std::isfinite(delta_f)) throw Error("array.delta_f must be finite");
    if (!taper.empty()) {
      if (taper.size() != n_elements)
        throw Error("array taper length must equal the element count");
      for (const auto& t : taper)
        if (std::abs(std::abs(t) - 1.0) > 1e-12)
          throw Error("array taper entries must have unit magnitude");
    }
  }

  std::complex<double> taper_at(std::size_t n) const {
    return taper.empty() ? std::complex<double>(1.0, 0.0) : taper[n];
  }
};

struct Constellation {
  std::string name;
  std::vector<std::complex<double>> points;  // unit magnitude

  static Constellation qpsk() {
    const double pi = std::numbers::pi;
    return {"qpsk",
            {std::polar(1.0, pi / 4), std::polar(1.0, 3 * pi / 4),
             std::polar(1.0, -pi / 4), std::polar(1.0, -3 * pi / 4)}};
  }

  static Constellation bpsk() { return {"bpsk", {{1.0, 0.0}, {-1.0, 0.0}}}; }

  static Constellation psk8() {
    const double pi = std::numbers::pi;
    Constellation c{"8psk", {}};
    for (int k = 0; k < 8; ++k) c.points.push_back(std::polar(1.0, pi / 8 + k * pi / 4));
    return c;
  }

  static Constellation from_name(const std::string& name) {
    if (name == "qpsk") return qpsk();
    if (name == "bpsk") return bpsk();
    if (name == "8psk") return psk8();
    throw Error("unknown constellation '" + name + "' (expected qpsk, bpsk or 8psk)");
  }

  void validate() const {
    if (points.empty()) throw Error("constellation must be nonempty");
    for (const auto& p : points)
      if (std::abs(std::abs(p) - 1.0) > 1e-12)
        throw Error("constellation points must have unit magnitude");
  }
};

// Transmission toward a single secure coordinate (theta0, range0) with
// amplitude split p (information) / q (artificial noise).
struct Scenario {
  double theta0 = 0.0;  // rad, in (0, pi)
  double range0 = 0.0;  // m
  double p = 0.0;
  double q = 0.0;
  Constellation constellation = Constellation::qpsk();
  std::size_t n_symbols = 0;
  std::uint64_t seed = 0;
  std::optional<double> symbol_period;  // s, needed only for windowed reception

  void validate() const {
    if (!(theta0 > 0.0 && theta0 < std::numbers::pi))
      throw Error("scenario.theta0 must lie strictly between 0 and 180 deg");
    if (!(range0 > 0.0)) throw Error("scenario.range must be positive");
    if (p < 0.0 || q < 0.0) throw Error("scenario.p and scenario.q must be nonnegative");
    if (p * p + q * q <= 0.0) throw Error("scenario needs p*p + q*q > 0");
    if (n_symbols < 1) throw Error("scenario.symbols must be at least 1");
    if (symbol_period && !(*symbol_period > 0.0))
      throw Error("scenario.symbol_period must be positive");
    constellation.validate();
  }
};

// Far-field evaluation coordinate. range is the displacement from the first
// (reference) element; time is the observation instant, any sign.
struct ObservationPoint {
  double theta = 0.0;  // rad, [0, pi]
  double range = 0.0;  // m, > 0
  double time = 0.0;   // s
};

// One symbol driven through the array's native taper.
inline std::vector<std::complex<double>> uniform_excitation(const ArrayConfig& cfg,
                                                            std::complex<double> symbol) {
  std::vector<std::complex<double>> exc(cfg.n_elements);
  for (std::size_t n = 0; n < cfg.n_elements; ++n) exc[n] = symbol * cfg.taper_at(n);
  return exc;
}

// Element carrier ladder: entry n is f0 + n*delta_f (0-based n).
inline std::vector<double> carrier_frequencies(const ArrayConfig& cfg) {
  std::vector<double> freqs(cfg.n_elements);
  for (std::size_t n = 0; n < cfg.n_elements; ++n)
    freqs[n] = cfg.f0 + static_cast<double>(n) * cfg.delta_f;
  return freqs;
}

// Per-element phase advance toward theta, in carrier cycles per element step.
// steering_vector and the field evaluators share this expression so the
// matched-filter product collapses to exactly 1 per element at theta0.
inline double element_step_cycles(const ArrayConfig& cfg, double theta,
                                  const PhysicalConstants& pc) {
  return cfg.f0 * cfg.spacing * std::cos(theta) / pc.c;
}

inline ChannelVector steering_vector(const ArrayConfig& cfg, double theta,
                                     const PhysicalConstants& pc) {
  const double step = element_step_cycles(cfg, theta, pc);
  ChannelVector h(cfg.n_elements);
  for (std::size_t n = 0; n < cfg.n_elements; ++n)
    h[n] = unit_phasor(std::fmod(static_cast<double>(n) * step, 1.0));
  return h;
}

// Conventional far-field distance 2*(N*d)^2*f0/c. Not enforced anywhere;
// used only for warning diagnostics.
inline double far_field_range_bound(const ArrayConfig& cfg, const PhysicalConstants& pc) {
  const double aperture = static_cast<double>(cfg.n_elements) * cfg.spacing;
  return 2.0 * aperture * aperture * cfg.f0 / pc.c;
}

// Warning-level diagnostics; none of these block a run.
inline std::vector<std::string> config_diagnostics(const ArrayConfig& cfg,
                                                   const PhysicalConstants& pc,
                                                   double min_observed_range) {
  std::vector<std::string> warnings;
  if (cfg.f0 > 0.0 && std::abs(cfg.delta_f) / cfg.f0 > 1e-3)
    warnings.push_back("frequency increment exceeds 1e-3 of the carrier; "
                       "the narrowband model is questionable");
  const double bound = far_field_range_bound(cfg, pc);
  if (min_observed_range > 0.0 && min_observed_range < bound)
    warnings.push_back("observation range " + std::to_string(min_observed_range) +
                       " m is inside the far-field bound " + std::to_string(bound) + " m");
  return warnings;
}

}  // namespace fdadm
