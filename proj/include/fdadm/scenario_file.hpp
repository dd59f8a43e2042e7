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

// Scenario files: "key = value" lines under [array] / [scenario] / [grid] /
// [receiver] / [output] sections, physical quantities with explicit unit
// suffixes. Unknown sections and keys are rejected; missing required keys
// are reported all at once; parse -> serialize -> parse is the identity.
// A manifest is the same format with one extra [run] section.

#pragma once

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdadm/constants.hpp"
#include "fdadm/error.hpp"
#include "fdadm/fda.hpp"
#include "fdadm/model.hpp"
#include "fdadm/receiver.hpp"
#include "fdadm/sweep.hpp"

namespace fdadm {

enum class OutputProfile { Summary, Symbols };

inline const char* to_string(OutputProfile p) {
  return p == OutputProfile::Summary ? "summary" : "symbols";
}

// Manifest metadata, order-preserving.
struct RunSection {
  std::vector<std::pair<std::string, std::string>> entries;

  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : entries)
      if (k == key) return &v;
    return nullptr;
  }
};

// Fully resolved run configuration, SI units throughout.
struct ParsedScenario {
  ArrayConfig array;
  std::vector<double> taper_phases_deg;  // source form of array.taper; empty = all ones
  Scenario scenario;
  GridSpec grid;
  Integration receiver;
  double evm_threshold = 0.1;
  PhaseMode phase_mode = PhaseMode::DropQuadratic;
  CMode c_mode = CMode::Paper;
  OutputProfile profile = OutputProfile::Summary;

  PhysicalConstants constants() const { return PhysicalConstants::from_mode(c_mode); }
};

namespace detail {

enum class Dim { Frequency, Length, Time, Angle, Dimensionless, Count };

struct UnitDef {
  const char* name;
  int decimal_exponent;
};

inline const std::vector<UnitDef>& units_for(Dim dim) {
  static const std::vector<UnitDef> freq{{"hz", 0}, {"khz", 3}, {"mhz", 6}, {"ghz", 9}};
  static const std::vector<UnitDef> len{{"m", 0}, {"cm", -2}, {"mm", -3}, {"km", 3}};
  static const std::vector<UnitDef> time{{"s", 0}, {"ms", -3}, {"us", -6}, {"ns", -9}};
  static const std::vector<UnitDef> none{};
  switch (dim) {
    case Dim::Frequency: return freq;
    case Dim::Length: return len;
    case Dim::Time: return time;
    default: return none;
  }
}

inline const char* dim_name(Dim dim) {
  switch (dim) {
    case Dim::Frequency: return "frequency";
    case Dim::Length: return "length";
    case Dim::Time: return "time";
    case Dim::Angle: return "angle";
    case Dim::Count: return "count";
    default: return "dimensionless";
  }
}

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(trim(s.substr(pos)));
      return out;
    }
    out.push_back(trim(s.substr(pos, next - pos)));
    pos = next + 1;
  }
}

inline long double parse_long_double(const std::string& txt, int line) {
  if (txt.empty()) throw ParseError(line, "missing numeric value");
  errno = 0;
  char* end = nullptr;
  const long double v = std::strtold(txt.c_str(), &end);
  if (end != txt.c_str() + txt.size() || errno == ERANGE)
    throw ParseError(line, "malformed number '" + txt + "'");
  return v;
}

// "value [unit]", the unit optionally attached ("20us"). Decimal unit
// prefixes are applied in extended precision so aliases like "10 khz" and
// "0.00001 ghz" land on the identical double.
inline double parse_quantity(const std::string& text, Dim dim, int line) {
  const std::string t = trim(text);
  std::size_t unit_begin = t.size();
  while (unit_begin > 0 && std::isalpha(static_cast<unsigned char>(t[unit_begin - 1])))
    --unit_begin;
  const std::string unit = t.substr(unit_begin);
  const std::string num = trim(t.substr(0, unit_begin));

  if (dim == Dim::Dimensionless || dim == Dim::Count) {
    if (!unit.empty())
      throw ParseError(line, "'" + unit + "' not allowed: value is " +
                                 std::string(dim_name(dim)));
    const long double v = parse_long_double(num, line);
    if (dim == Dim::Count) {
      if (v < 0 || v != std::floor(static_cast<double>(v)))
        throw ParseError(line, "expected a nonnegative integer, got '" + num + "'");
    }
    return static_cast<double>(v);
  }

  if (unit.empty())
    throw ParseError(line, "missing " + std::string(dim_name(dim)) + " unit on '" + t + "'");

  const long double v = parse_long_double(num, line);
  if (dim == Dim::Angle) {
    if (unit == "deg") return static_cast<double>(v * std::numbers::pi_v<long double> / 180.0L);
    if (unit == "rad") return static_cast<double>(v);
    throw ParseError(line, "unit '" + unit + "' is not an angle unit (expected deg or rad)");
  }

  for (const UnitDef& u : units_for(dim))
    if (unit == u.name)
      return static_cast<double>(v * std::pow(10.0L, static_cast<long double>(u.decimal_exponent)));

  std::string allowed;
  for (const UnitDef& u : units_for(dim)) {
    if (!allowed.empty()) allowed += ", ";
    allowed += u.name;
  }
  throw ParseError(line, "unit '" + unit + "' is not a " + dim_name(dim) +
                             " unit (expected " + allowed + ")");
}

// "value unit" (fixed) or "start unit, stop unit, count".
inline Axis parse_axis(const std::string& text, Dim dim, int line) {
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() == 1) {
    const double v = parse_quantity(parts[0], dim, line);
    return Axis{v, v, 1};
  }
  if (parts.size() != 3)
    throw ParseError(line, "axis needs 'value unit' or 'start unit, stop unit, count'");
  Axis axis;
  axis.start = parse_quantity(parts[0], dim, line);
  axis.stop = parse_quantity(parts[1], dim, line);
  const double count = parse_quantity(parts[2], Dim::Count, line);
  axis.count = static_cast<std::size_t>(count);
  if (axis.count < 1) throw ParseError(line, "axis count must be at least 1");
  if (!(axis.start <= axis.stop)) throw ParseError(line, "axis start must not exceed stop");
  if (axis.count == 1 && axis.start != axis.stop)
    throw ParseError(line, "axis with count 1 must have start == stop");
  return axis;
}

struct RawEntry {
  std::string value;
  int line = 0;
};

}  // namespace detail

inline std::vector<double> parse_time_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& part : detail::split(text, ','))
    out.push_back(detail::parse_quantity(part, detail::Dim::Time, 0));
  return out;
}

inline ParsedScenario parse_scenario(const std::string& text, RunSection* run_out = nullptr) {
  using detail::Dim;
  static const std::map<std::string, std::vector<std::string>> schema{
      {"array", {"elements", "spacing", "f0", "delta_f", "taper_phase_deg"}},
      {"scenario",
       {"theta0", "range", "p", "q", "symbols", "constellation", "symbol_period",
        "phase_mode", "c_mode"}},
      {"grid", {"theta", "range", "time"}},
      {"receiver", {"integration", "quadrature_nodes", "evm_threshold"}},
      {"output", {"profile"}},
      {"run", {"tool", "version", "subcommand", "seed", "axis", "times", "periods"}}};

  std::map<std::string, detail::RawEntry> entries;  // "section.key" -> value
  RunSection run;

  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
      section = detail::trim(line.substr(1, line.size() - 2));
      if (!schema.count(section))
        throw ParseError(line_no, "unknown section '[" + section + "]'");
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "expected 'key = value', got '" + line + "'");
    if (section.empty()) throw ParseError(line_no, "key outside of any section");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "empty key");
    if (value.empty()) throw ParseError(line_no, "empty value for key '" + key + "'");

    const auto& allowed = schema.at(section);
    bool known = false;
    for (const auto& k : allowed) known = known || (k == key);
    if (!known) throw ParseError(line_no, "unknown key '" + key + "' in [" + section + "]");

    if (section == "run") {
      run.entries.emplace_back(key, value);
      continue;
    }
    const std::string full = section + "." + key;
    if (entries.count(full)) throw ParseError(line_no, "duplicate key '" + full + "'");
    entries[full] = {value, line_no};
  }

  static const std::vector<std::string> required{
      "array.elements", "array.spacing", "array.f0",   "array.delta_f", "scenario.theta0",
      "scenario.range", "scenario.p",    "scenario.q", "scenario.symbols"};
  std::string missing;
  for (const auto& key : required)
    if (!entries.count(key)) missing += (missing.empty() ? "" : ", ") + key;
  if (!missing.empty()) throw ParseError(0, "missing required keys: " + missing);

  const auto get = [&](const char* key) -> const detail::RawEntry& { return entries.at(key); };
  const auto maybe = [&](const char* key) -> const detail::RawEntry* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };
  const auto quantity = [&](const detail::RawEntry& e, Dim dim) {
    return detail::parse_quantity(e.value, dim, e.line);
  };

  ParsedScenario out;
  out.array.n_elements = static_cast<std::size_t>(quantity(get("array.elements"), Dim::Count));
  out.array.spacing = quantity(get("array.spacing"), Dim::Length);
  out.array.f0 = quantity(get("array.f0"), Dim::Frequency);
  out.array.delta_f = quantity(get("array.delta_f"), Dim::Frequency);
  if (const auto* taper = maybe("array.taper_phase_deg")) {
    for (const std::string& part : detail::split(taper->value, ','))
      out.taper_phases_deg.push_back(
          static_cast<double>(detail::parse_long_double(part, taper->line)));
    if (out.taper_phases_deg.size() != out.array.n_elements)
      throw ParseError(taper->line, "taper needs one phase per element");
    out.array.taper.clear();
    for (const double deg : out.taper_phases_deg)
      out.array.taper.push_back(std::polar(1.0, deg * std::numbers::pi / 180.0));
  }

  out.scenario.theta0 = quantity(get("scenario.theta0"), Dim::Angle);
  {
    const auto& e = get("scenario.theta0");
    if (!(out.scenario.theta0 > 0.0 && out.scenario.theta0 < std::numbers::pi))
      throw ParseError(e.line, "theta0 must lie strictly between 0 deg and 180 deg");
  }
  out.scenario.range0 = quantity(get("scenario.range"), Dim::Length);
  out.scenario.p = quantity(get("scenario.p"), Dim::Dimensionless);
  out.scenario.q = quantity(get("scenario.q"), Dim::Dimensionless);
  out.scenario.n_symbols = static_cast<std::size_t>(quantity(get("scenario.symbols"), Dim::Count));
  if (const auto* c = maybe("scenario.constellation")) {
    try {
      out.scenario.constellation = Constellation::from_name(c->value);
    } catch (const Error& err) {
      throw ParseError(c->line, err.what());
    }
  }
  if (const auto* t = maybe("scenario.symbol_period"))
    out.scenario.symbol_period = quantity(*t, Dim::Time);
  if (const auto* m = maybe("scenario.phase_mode")) {
    if (m->value == "exact")
      out.phase_mode = PhaseMode::Exact;
    else if (m->value == "approx")
      out.phase_mode = PhaseMode::DropQuadratic;
    else
      throw ParseError(m->line, "phase_mode must be 'exact' or 'approx'");
  }
  if (const auto* m = maybe("scenario.c_mode")) {
    if (m->value == "si")
      out.c_mode = CMode::Si;
    else if (m->value == "paper")
      out.c_mode = CMode::Paper;
    else
      throw ParseError(m->line, "c_mode must be 'si' or 'paper'");
  }

  out.grid.theta = Axis{out.scenario.theta0, out.scenario.theta0, 1};
  out.grid.range = Axis{out.scenario.range0, out.scenario.range0, 1};
  out.grid.time = Axis{0.0, 0.0, 1};
  if (const auto* a = maybe("grid.theta"))
    out.grid.theta = detail::parse_axis(a->value, Dim::Angle, a->line);
  if (const auto* a = maybe("grid.range"))
    out.grid.range = detail::parse_axis(a->value, Dim::Length, a->line);
  if (const auto* a = maybe("grid.time"))
    out.grid.time = detail::parse_axis(a->value, Dim::Time, a->line);

  if (const auto* i = maybe("receiver.integration")) {
    if (i->value == "instant")
      out.receiver.kind = Integration::Kind::Instant;
    else if (i->value == "window")
      out.receiver.kind = Integration::Kind::OverT;
    else
      throw ParseError(i->line, "integration must be 'instant' or 'window'");
  }
  if (const auto* n = maybe("receiver.quadrature_nodes")) {
    out.receiver.n_quad = static_cast<int>(quantity(*n, Dim::Count));
    if (out.receiver.n_quad < 8) throw ParseError(n->line, "quadrature_nodes must be >= 8");
  }
  if (const auto* t = maybe("receiver.evm_threshold")) {
    out.evm_threshold = quantity(*t, Dim::Dimensionless);
    if (!(out.evm_threshold > 0.0)) throw ParseError(t->line, "evm_threshold must be positive");
  }
  if (const auto* p = maybe("output.profile")) {
    if (p->value == "summary")
      out.profile = OutputProfile::Summary;
    else if (p->value == "symbols")
      out.profile = OutputProfile::Symbols;
    else
      throw ParseError(p->line, "profile must be 'summary' or 'symbols'");
  }

  try {
    out.array.validate();
    out.scenario.validate();
    out.grid.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(0, err.what());
  }

  if (run_out) *run_out = std::move(run);
  return out;
}

namespace detail {

inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string axis_text(const Axis& axis, const char* unit) {
  return g17(axis.start) + " " + unit + ", " + g17(axis.stop) + " " + unit + ", " +
         std::to_string(axis.count);
}

}  // namespace detail

// Canonical SI-unit form; parse(serialize(x)) == x field for field.
inline std::string serialize_scenario(const ParsedScenario& s) {
  std::string out;
  out += "[array]\n";
  out += "elements = " + std::to_string(s.array.n_elements) + "\n";
  out += "spacing = " + detail::g17(s.array.spacing) + " m\n";
  out += "f0 = " + detail::g17(s.array.f0) + " hz\n";
  out += "delta_f = " + detail::g17(s.array.delta_f) + " hz\n";
  if (!s.taper_phases_deg.empty()) {
    out += "taper_phase_deg = ";
    for (std::size_t i = 0; i < s.taper_phases_deg.size(); ++i)
      out += (i ? ", " : "") + detail::g17(s.taper_phases_deg[i]);
    out += "\n";
  }
  out += "\n[scenario]\n";
  out += "theta0 = " + detail::g17(s.scenario.theta0) + " rad\n";
  out += "range = " + detail::g17(s.scenario.range0) + " m\n";
  out += "p = " + detail::g17(s.scenario.p) + "\n";
  out += "q = " + detail::g17(s.scenario.q) + "\n";
  out += "symbols = " + std::to_string(s.scenario.n_symbols) + "\n";
  out += "constellation = " + s.scenario.constellation.name + "\n";
  if (s.scenario.symbol_period)
    out += "symbol_period = " + detail::g17(*s.scenario.symbol_period) + " s\n";
  out += std::string("phase_mode = ") + to_string(s.phase_mode) + "\n";
  out += std::string("c_mode = ") + to_string(s.c_mode) + "\n";
  out += "\n[grid]\n";
  out += "theta = " + detail::axis_text(s.grid.theta, "rad") + "\n";
  out += "range = " + detail::axis_text(s.grid.range, "m") + "\n";
  out += "time = " + detail::axis_text(s.grid.time, "s") + "\n";
  out += "\n[receiver]\n";
  out += std::string("integration = ") +
         (s.receiver.kind == Integration::Kind::Instant ? "instant" : "window") + "\n";
  out += "quadrature_nodes = " + std::to_string(s.receiver.n_quad) + "\n";
  out += "evm_threshold = " + detail::g17(s.evm_threshold) + "\n";
  out += "\n[output]\n";
  out += std::string("profile = ") + to_string(s.profile) + "\n";
  return out;
}

}  // namespace fdadm
