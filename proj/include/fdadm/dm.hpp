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

// Directional-modulation excitation synthesis: a matched information beam
// toward theta0 plus unit-power artificial noise that a receiver at theta0
// cannot see. The noise constraint is sum(W_n * H_n(theta0)) = 0, so the
// radiated noise field vanishes at the secure direction; equivalently W is
// orthogonal (standard inner product) to conj(H(theta0)).

#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <vector>

#include "fdadm/error.hpp"
#include "fdadm/model.hpp"
#include "fdadm/nullspace.hpp"
#include "fdadm/rng.hpp"

namespace fdadm {

struct NoiseVector {
  std::vector<std::complex<double>> entries;
  std::uint64_t symbol_index = 0;
};

struct ExcitationVector {
  std::vector<std::complex<double>> entries;
  std::complex<double> symbol;
};

// Unit-power noise draw for one symbol. A pure function of
// (h0, seed, symbol_index): replaying the same key reproduces the same
// vector bit for bit, independent of evaluation order.
inline NoiseVector draw_artificial_noise(const ChannelVector& h0, std::uint64_t seed,
                                         std::uint64_t symbol_index) {
  const std::size_t n = h0.size();
  if (n < 2) throw Error("no null space: a single-element array cannot carry artificial noise");

  std::vector<std::complex<double>> target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = std::conj(h0[i]);
  const auto basis = null_space_basis(target);

  CounterRng rng(seed, kStreamArtificialNoise, symbol_index);
  std::vector<std::complex<double>> w(n, 0.0);
  double power = 0.0;
  do {
    std::fill(w.begin(), w.end(), std::complex<double>(0.0, 0.0));
    for (const auto& b : basis) {
      const std::complex<double> coeff = rng.complex_gaussian();
      for (std::size_t i = 0; i < n; ++i) w[i] += coeff * b[i];
    }
    power = norm_squared(w);
  } while (power <= 1e-24);

  const double inv = 1.0 / std::sqrt(power);
  for (auto& x : w) x *= inv;
  return {std::move(w), symbol_index};
}

// G_n = p * D * conj(h0_n) + q * W_n.
inline ExcitationVector synthesize_excitation(const Scenario& scn, const ChannelVector& h0,
                                              std::complex<double> d_sym,
                                              const NoiseVector& w) {
  if (h0.size() != w.entries.size())
    throw Error("channel vector and noise vector lengths disagree");
  ExcitationVector exc;
  exc.symbol = d_sym;
  exc.entries.resize(h0.size());
  for (std::size_t n = 0; n < h0.size(); ++n)
    exc.entries[n] = scn.p * d_sym * std::conj(h0[n]) + scn.q * w.entries[n];
  return exc;
}

// Narrowband (delta_f = 0) far field: sum_n G_n H_n(theta) times the common
// carrier phasor. Kept as a direct evaluation of that product so it doubles
// as an independent route against the frequency-ladder evaluator.
inline ComplexField dm_field(const ArrayConfig& cfg, const ExcitationVector& exc,
                                     const ObservationPoint& obs,
                                     const PhysicalConstants& pc) {
  if (cfg.delta_f != 0.0)
    throw Error("dm_field requires delta_f == 0; use fda_field for a frequency ladder");
  if (exc.entries.size() != cfg.n_elements)
    throw Error("excitation length must equal the element count");

  const ChannelVector h = steering_vector(cfg, obs.theta, pc);
  std::complex<double> acc = 0.0;
  for (std::size_t n = 0; n < cfg.n_elements; ++n) acc += exc.entries[n] * h[n];

  const PropagationTime w = propagation_time(obs.time, obs.range, pc.c);
  return acc * unit_phasor(cycle_fraction(cfg.f0, w));
}

}  // namespace fdadm
