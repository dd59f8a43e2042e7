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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fdadm/error.hpp"

namespace fdadm {

// Standard inner product sum(a_n * conj(b_n)).
inline std::complex<double> inner_product(std::span<const std::complex<double>> a,
                                          std::span<const std::complex<double>> b) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
  return acc;
}

inline double norm_squared(std::span<const std::complex<double>> a) {
  double acc = 0.0;
  for (const auto& v : a) acc += std::norm(v);
  return acc;
}

// Orthonormal basis of the orthogonal complement of h: exactly N-1 vectors b
// with sum(b_n * conj(h_n)) = 0, built by Gram-Schmidt over the canonical
// basis. The canonical vector most parallel to h is the skipped pivot; a
// second orthogonalization sweep keeps residuals near machine precision.
// Deterministic: depends only on h.
inline std::vector<std::vector<std::complex<double>>> null_space_basis(
    std::span<const std::complex<double>> h) {
  const std::size_t n = h.size();
  if (n < 2) throw Error("no null space: need at least 2 elements");

  const double h_norm2 = norm_squared(h);
  if (h_norm2 <= 0.0) throw Error("null space of a zero vector is undefined");
  const double inv_norm = 1.0 / std::sqrt(h_norm2);
  std::vector<std::complex<double>> unit(n);
  for (std::size_t i = 0; i < n; ++i) unit[i] = h[i] * inv_norm;

  std::size_t pivot = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (std::norm(unit[i]) > std::norm(unit[pivot])) pivot = i;

  std::vector<std::vector<std::complex<double>>> basis;
  basis.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == pivot) continue;
    std::vector<std::complex<double>> v(n, 0.0);
    v[i] = 1.0;
    for (int sweep = 0; sweep < 2; ++sweep) {
      const std::complex<double> along = inner_product(v, unit);
      for (std::size_t k = 0; k < n; ++k) v[k] -= along * unit[k];
      for (const auto& b : basis) {
        const std::complex<double> c = inner_product(v, b);
        for (std::size_t k = 0; k < n; ++k) v[k] -= c * b[k];
      }
    }
    const double len = std::sqrt(norm_squared(v));
    if (len <= 1e-12) throw Error("null-space construction degenerated");
    for (auto& x : v) x /= len;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fdadm
