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

namespace fdadm {

// Wave-speed mode. Rounded keeps c = 3.0e8 so that textbook identities such
// as delta_f = c/range = 10 kHz hold exactly and golden files stay
// bit-reproducible; Si uses the exact SI value.
enum class CMode { Si, Paper };

struct PhysicalConstants {
  double c;  // wave speed, m/s

  static constexpr PhysicalConstants si() { return {299'792'458.0}; }
  static constexpr PhysicalConstants paper() { return {3.0e8}; }
  static constexpr PhysicalConstants from_mode(CMode mode) {
    return mode == CMode::Si ? si() : paper();
  }
};

inline const char* to_string(CMode mode) { return mode == CMode::Si ? "si" : "paper"; }

}  // namespace fdadm
