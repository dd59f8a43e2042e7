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

#include <stdexcept>
#include <string>

namespace fdadm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scenario-file syntax or schema problem; line is 1-based, 0 when unknown.
struct ParseError : Error {
  ParseError(int line_number, const std::string& what)
      : Error(line_number > 0 ? "line " + std::to_string(line_number) + ": " + what : what),
        line(line_number) {}
  int line = 0;
};

struct QuadratureError : Error {
  using Error::Error;
};

// Secure region lost or degenerate during velocity estimation.
struct RegionError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace fdadm
