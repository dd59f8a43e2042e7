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

// Carrier-phase bookkeeping. Arguments of the form f*(t - r/c) reach 1e5..1e6
// carrier cycles at gigahertz frequencies and kilometre ranges, while the
// physics lives entirely in the fractional cycle. A naive double product
// loses ~1e-10 cycles there, which is visible against the analytic
// identities this library is tested on. The fractional cycle is therefore
// recovered from a compensated two-term product: fmod on doubles is exact,
// and fma exposes the product residual, so the only loss left is the
// second-order rounding of the small terms (~1e-16 cycles, absolute).

#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace fdadm {

namespace detail {

struct TwoTerm {
  double hi = 0.0;
  double lo = 0.0;
};

inline TwoTerm two_sum(double a, double b) {
  const double s = a + b;
  const double t = s - a;
  return {s, (a - (s - t)) + (b - t)};
}

inline TwoTerm two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace detail

// t - range/c carried as hi + lo; the division residual is retained so the
// pair differs from the exact value only at second order.
struct PropagationTime {
  double hi = 0.0;
  double lo = 0.0;
};

inline PropagationTime propagation_time(double time, double range, double wave_speed) {
  const double q = range / wave_speed;
  const double residual = std::fma(-q, wave_speed, range);  // range - q*c, exact
  const detail::TwoTerm s = detail::two_sum(time, -q);
  return {s.hi, s.lo - residual / wave_speed};
}

// Fractional part, in cycles, of frequency*w + extra_cycles. |result| < 2,
// suitable for unit_phasor without further reduction.
inline double cycle_fraction(double frequency, const PropagationTime& w,
                             double extra_cycles = 0.0) {
  const detail::TwoTerm p = detail::two_prod(frequency, w.hi);
  const double whole = std::fmod(p.hi, 1.0);
  const double rest = p.lo + frequency * w.lo + std::fmod(extra_cycles, 1.0);
  return whole + std::fmod(rest, 1.0);
}

inline std::complex<double> unit_phasor(double cycles) {
  const double arg = 2.0 * std::numbers::pi * cycles;
  return {std::cos(arg), std::sin(arg)};
}

}  // namespace fdadm
