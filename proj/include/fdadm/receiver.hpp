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

// Reception model: carrier stripping, optional integration over a symbol
// window, minimum-distance demodulation, and EVM/SER metrics. No thermal
// noise and no bit mapping; the receiver is assumed synchronized and
// equalized with the known clean gain p*N.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "fdadm/dm.hpp"
#include "fdadm/error.hpp"
#include "fdadm/fda.hpp"
#include "fdadm/model.hpp"
#include "fdadm/rng.hpp"

namespace fdadm {

struct MetricReport {
  double evm_rms = 0.0;
  double ser = 0.0;
  double residual_noise_power = 0.0;
  std::size_t n_symbols = 0;
  std::size_t n_symbol_errors = 0;
};

struct Integration {
  enum class Kind { Instant, OverT };
  Kind kind = Kind::Instant;
  int n_quad = 64;
};

// Strips the reference carrier including the receiver's own propagation
// phase, so a clean field p*N*D*phasor(f0*(t - r/c)) comes back as p*N*D.
inline std::complex<double> downconvert_instant(ComplexField field,
                                                const ObservationPoint& obs, double f0,
                                                const PhysicalConstants& pc) {
  const PropagationTime w = propagation_time(obs.time, obs.range, pc.c);
  return field * std::conj(unit_phasor(cycle_fraction(f0, w)));
}

namespace detail {

// 8-point Gauss-Legendre rule on [-1, 1] (positive half; symmetric).
inline constexpr std::array<double, 4> kGaussNodes = {
    0.1834346424956498049, 0.5255324099163289858, 0.7966664774136267396,
    0.9602898564975362317};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.3626837833783619830, 0.3137066458778872873, 0.2223810344533744705,
    0.1012285362903762592};

}  // namespace detail

// Time-averaged downconverted field over [t_start, t_start + period] for one
// symbol, by composite 8-point Gauss-Legendre panels starting from n_quad
// nodes. The integrand is a finite sum of tones no faster than
// (N-1)*delta_f. Panels double until two successive results agree to 1e-6
// relative; if the doubling cap is hit first the call fails rather than
// return an unverified value.
inline std::complex<double> integrate_symbol(const ArrayConfig& cfg, const Scenario& scn,
                                             std::complex<double> d_sym,
                                             const NoiseVector& noise,
                                             const ObservationPoint& obs_start, double period,
                                             int n_quad, PhaseMode mode,
                                             const PhysicalConstants& pc) {
  if (!(period > 0.0)) throw Error("integration period must be positive");
  if (n_quad < 8) throw Error("integrate_symbol needs at least 8 quadrature nodes");

  const ChannelVector h0 = steering_vector(cfg, scn.theta0, pc);
  const ExcitationVector exc = synthesize_excitation(scn, h0, d_sym, noise);

  const auto integral = [&](std::size_t panels) {
    std::complex<double> acc = 0.0;
    const double width = period / static_cast<double>(panels);
    const double half = 0.5 * width;
    for (std::size_t panel = 0; panel < panels; ++panel) {
      const double mid = obs_start.time + width * (static_cast<double>(panel) + 0.5);
      for (std::size_t i = 0; i < detail::kGaussNodes.size(); ++i) {
        for (const double sign : {-1.0, 1.0}) {
          const ObservationPoint at{obs_start.theta, obs_start.range,
                                    mid + sign * half * detail::kGaussNodes[i]};
          const std::complex<double> field = fda_field(cfg, exc.entries, at, mode, pc);
          acc += detail::kGaussWeights[i] * downconvert_instant(field, at, cfg.f0, pc);
        }
      }
    }
    return acc * (half / period);
  };

  std::size_t panels = static_cast<std::size_t>((n_quad + 7) / 8);
  std::complex<double> coarse = integral(panels);
  for (int round = 0; round < 7; ++round) {
    const std::complex<double> fine = integral(panels * 2);
    if (std::abs(fine - coarse) <= 1e-6 * std::abs(fine) + 1e-15) return fine;
    coarse = fine;
    panels *= 2;
  }
  throw QuadratureError("symbol integration did not converge under node doubling");
}

// Minimum-distance detection after dividing out the known clean gain.
// Ties resolve to the lowest constellation index; scale <= 0 leaves the
// sample unscaled.
inline std::size_t demodulate(std::complex<double> baseband,
                              const Constellation& constellation, double scale) {
  if (constellation.points.empty()) throw Error("constellation must be nonempty");
  const std::complex<double> z = scale > 0.0 ? baseband / scale : baseband;
  std::size_t best = 0;
  double best_dist = std::norm(z - constellation.points[0]);
  for (std::size_t i = 1; i < constellation.points.size(); ++i) {
    const double dist = std::norm(z - constellation.points[i]);
    if (dist < best_dist) {
      best = i;
      best_dist = dist;
    }
  }
  return best;
}

// One transmission's worth of replayable randomness: symbol choices, noise
// draws, and the synthesized excitations, all keyed by (seed, symbol index).
struct SymbolStream {
  std::vector<std::size_t> tx_indices;
  std::vector<std::complex<double>> tx_symbols;
  std::vector<NoiseVector> noise;
  std::vector<ExcitationVector> excitations;
};

inline SymbolStream make_symbol_stream(const ArrayConfig& cfg, const Scenario& scn,
                                       const PhysicalConstants& pc) {
  const ChannelVector h0 = steering_vector(cfg, scn.theta0, pc);
  SymbolStream stream;
  stream.tx_indices.reserve(scn.n_symbols);
  stream.tx_symbols.reserve(scn.n_symbols);
  stream.noise.reserve(scn.n_symbols);
  stream.excitations.reserve(scn.n_symbols);
  const std::size_t order = scn.constellation.points.size();
  for (std::size_t k = 0; k < scn.n_symbols; ++k) {
    CounterRng rng(scn.seed, kStreamSymbolChoice, k);
    const std::size_t idx = static_cast<std::size_t>(rng.uniform_below(order));
    const std::complex<double> d = scn.constellation.points[idx];
    // q == 0 transmits no noise at all; a zero vector keeps single-element
    // information-only scenarios valid.
    NoiseVector w = scn.q > 0.0
                        ? draw_artificial_noise(h0, scn.seed, k)
                        : NoiseVector{std::vector<std::complex<double>>(cfg.n_elements, 0.0), k};
    stream.tx_indices.push_back(idx);
    stream.tx_symbols.push_back(d);
    stream.excitations.push_back(synthesize_excitation(scn, h0, d, w));
    stream.noise.push_back(std::move(w));
  }
  return stream;
}

struct LinkSamples {
  std::vector<std::complex<double>> fields;     // instantaneous field per symbol
  std::vector<std::complex<double>> basebands;  // downconverted (and maybe integrated)
  MetricReport metrics;
};

// Receives every symbol of the stream at one observation point. OverT
// integration centers the window on the sampling instant. The EVM reference
// gain is p*N regardless of integration (the residual left by a finite
// window is part of what the metric measures).
inline LinkSamples evaluate_stream(const ArrayConfig& cfg, const Scenario& scn,
                                   const SymbolStream& stream, const ObservationPoint& obs,
                                   PhaseMode mode, const Integration& integration,
                                   const PhysicalConstants& pc) {
  const std::size_t count = stream.tx_symbols.size();
  LinkSamples out;
  out.fields.resize(count);
  out.basebands.resize(count);

  double period = 0.0;
  if (integration.kind == Integration::Kind::OverT) {
    if (!scn.symbol_period)
      throw Error("scenario.symbol_period is required for windowed integration");
    period = *scn.symbol_period;
  }

  for (std::size_t k = 0; k < count; ++k) {
    const std::complex<double> field =
        fda_field(cfg, stream.excitations[k].entries, obs, mode, pc);
    out.fields[k] = field;
    if (integration.kind == Integration::Kind::Instant) {
      out.basebands[k] = downconvert_instant(field, obs, cfg.f0, pc);
    } else {
      const ObservationPoint window_start{obs.theta, obs.range, obs.time - 0.5 * period};
      out.basebands[k] =
          integrate_symbol(cfg, scn, stream.tx_symbols[k], stream.noise[k], window_start,
                           period, integration.n_quad, mode, pc);
    }
  }

  const double n = static_cast<double>(cfg.n_elements);
  const double clean_gain = scn.p * n;
  const double scale = clean_gain > 0.0 ? clean_gain : 1.0;

  double err_power = 0.0;
  double ref_power = 0.0;
  double residual = 0.0;
  std::size_t errors = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const std::complex<double> d = stream.tx_symbols[k];
    err_power += std::norm(out.basebands[k] / scale - d);
    ref_power += std::norm(d);
    residual += std::norm(out.basebands[k] - scale * d);
    if (demodulate(out.basebands[k], scn.constellation, scale) != stream.tx_indices[k])
      ++errors;
  }

  out.metrics.n_symbols = count;
  out.metrics.n_symbol_errors = errors;
  out.metrics.ser = count ? static_cast<double>(errors) / static_cast<double>(count) : 0.0;
  out.metrics.evm_rms = ref_power > 0.0 ? std::sqrt(err_power / ref_power) : 0.0;
  out.metrics.residual_noise_power = count ? residual / static_cast<double>(count) : 0.0;
  return out;
}

inline MetricReport evaluate_link(const ArrayConfig& cfg, const Scenario& scn,
                                  const ObservationPoint& obs, PhaseMode mode,
                                  const Integration& integration,
                                  const PhysicalConstants& pc) {
  const SymbolStream stream = make_symbol_stream(cfg, scn, pc);
  return evaluate_stream(cfg, scn, stream, obs, mode, integration, pc).metrics;
}

}  // namespace fdadm
