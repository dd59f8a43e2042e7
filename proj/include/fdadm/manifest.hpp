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

// Run manifests: the fully resolved scenario in canonical form plus a [run]
// section recording tool, version, subcommand, seed and subcommand
// arguments. A manifest is itself a valid scenario file, so feeding it back
// to the same subcommand reproduces the outputs byte for byte.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fdadm/scenario_file.hpp"
#include "fdadm/version.hpp"

namespace fdadm {

struct RunManifest {
  ParsedScenario resolved;
  std::string subcommand;
  std::uint64_t seed = 0;
  // Subcommand arguments in emission order, e.g. {"axis", "range"}.
  std::vector<std::pair<std::string, std::string>> args;
};

inline std::string serialize_manifest(const RunManifest& m) {
  std::string out = serialize_scenario(m.resolved);
  out += "\n[run]\n";
  out += "tool = fdadm\n";
  out += std::string("version = ") + kVersion + "\n";
  out += "subcommand = " + m.subcommand + "\n";
  out += "seed = " + std::to_string(m.seed) + "\n";
  for (const auto& [key, value] : m.args) out += key + " = " + value + "\n";
  return out;
}

}  // namespace fdadm
