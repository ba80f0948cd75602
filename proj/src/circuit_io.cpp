// Copyright 2026 The photonsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "photonsim/circuit_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "photonsim/error.hpp"

namespace photonsim {

namespace {

using nlohmann::json;

void position_of(std::string_view text, std::size_t byte, int& line, int& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

class ComponentReader {
 public:
  ComponentReader(const json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j.is_object()) fail("expected an object");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(where_ + ": " + msg); }

  bool has(const char* key) const { return j_.contains(key); }

  double number(const char* key, std::optional<double> fallback = std::nullopt) {
    used_.insert(key);
    if (!j_.contains(key)) {
      if (fallback) return *fallback;
      fail(std::string("missing '") + key + "'");
    }
    const json& v = j_.at(key);
    if (!v.is_number()) fail(std::string("'") + key + "' must be a number");
    return v.get<double>();
  }

  int integer(const char* key) {
    used_.insert(key);
    if (!j_.contains(key)) fail(std::string("missing '") + key + "'");
    const json& v = j_.at(key);
    if (!v.is_number_integer()) fail(std::string("'") + key + "' must be an integer");
    return v.get<int>();
  }

  const json& raw(const char* key) {
    used_.insert(key);
    if (!j_.contains(key)) fail(std::string("missing '") + key + "'");
    return j_.at(key);
  }

  std::string text(const char* key, const std::string& fallback) {
    used_.insert(key);
    if (!j_.contains(key)) return fallback;
    if (!j_.at(key).is_string()) fail(std::string("'") + key + "' must be a string");
    return j_.at(key).get<std::string>();
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) fail("unknown key '" + key + "'");
    }
  }

 private:
  const json& j_;
  std::string where_;
  std::set<std::string> used_;
};

Circuit read_circuit(const json& j, const std::string& where);

void read_component(Circuit& circuit, const json& j, const std::string& where) {
  ComponentReader r(j, where);
  const std::string type = r.text("type", "");
  const int offset = r.integer("offset");
  try {
    if (type == "BS") {
      BeamSplitterPhases phases{r.number("phi_a", 0.0), r.number("phi_b", 0.0),
                                r.number("phi_d", 0.0)};
      if (r.has("R") && r.has("theta")) r.fail("give either 'theta' or 'R', not both");
      BeamSplitter bs = r.has("R") ? BeamSplitter::from_reflectivity(r.number("R"), phases)
                                   : BeamSplitter::from_theta(r.number("theta"), phases);
      r.finish();
      circuit.add(offset, bs);
    } else if (type == "PS") {
      PhaseShifter ps{r.number("phi")};
      r.finish();
      circuit.add(offset, ps);
    } else if (type == "PERM") {
      const json& p = r.raw("perm");
      if (!p.is_array()) r.fail("'perm' must be an array of integers");
      Permutation perm;
      for (const auto& v : p) {
        if (!v.is_number_integer()) r.fail("'perm' must be an array of integers");
        perm.perm.push_back(v.get<int>());
      }
      r.finish();
      circuit.add(offset, perm);
    } else if (type == "WP") {
      WavePlate wp{r.number("delta"), r.number("xi")};
      r.finish();
      circuit.add(offset, wp);
    } else if (type == "PBS") {
      r.finish();
      circuit.add(offset, PolarisingBeamSplitter{});
    } else if (type == "PR") {
      PolarisationRotator pr{r.number("delta")};
      r.finish();
      circuit.add(offset, pr);
    } else if (type == "TD") {
      TimeDelay td{r.integer("periods")};
      r.finish();
      circuit.add(offset, td);
    } else if (type == "CIRCUIT") {
      r.raw("modes");
      r.raw("components");
      r.text("name", "");
      r.finish();
      circuit.add(offset, read_circuit(j, where));
    } else {
      r.fail("unknown component type '" + type + "'");
    }
  } catch (const InvalidArgument& e) {
    r.fail(e.what());
  }
}

Circuit read_circuit(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a circuit object");
  if (!j.contains("modes") || !j.at("modes").is_number_integer()) {
    throw ParseError(where + ": missing integer 'modes'");
  }
  if (!j.contains("components") || !j.at("components").is_array()) {
    throw ParseError(where + ": missing array 'components'");
  }
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ParseError(where + ": 'name' must be a string");
    name = j.at("name").get<std::string>();
  }
  const int modes = j.at("modes").get<int>();
  if (modes < 1) throw ParseError(where + ": 'modes' must be positive");
  Circuit circuit(modes, name);
  const json& components = j.at("components");
  for (std::size_t i = 0; i < components.size(); ++i) {
    read_component(circuit, components[i], where + ".components[" + std::to_string(i) + "]");
  }
  return circuit;
}

json write_component(const Component& c) {
  json j;
  j["type"] = type_name(c);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BeamSplitter>) {
          if (v.reflectivity) {
            j["R"] = *v.reflectivity;
          } else {
            j["theta"] = v.theta;
          }
          if (v.phases.phi_a != 0) j["phi_a"] = v.phases.phi_a;
          if (v.phases.phi_b != 0) j["phi_b"] = v.phases.phi_b;
          if (v.phases.phi_d != 0) j["phi_d"] = v.phases.phi_d;
        } else if constexpr (std::is_same_v<T, PhaseShifter>) {
          j["phi"] = v.phi;
        } else if constexpr (std::is_same_v<T, Permutation>) {
          j["perm"] = v.perm;
        } else if constexpr (std::is_same_v<T, WavePlate>) {
          j["delta"] = v.delta;
          j["xi"] = v.xi;
        } else if constexpr (std::is_same_v<T, PolarisationRotator>) {
          j["delta"] = v.delta;
        } else if constexpr (std::is_same_v<T, TimeDelay>) {
          j["periods"] = v.periods;
        }
      },
      c);
  return j;
}

json write_circuit(const Circuit& circuit) {
  json j;
  j["modes"] = circuit.modes();
  j["name"] = circuit.name();
  json components = json::array();
  for (const auto& p : circuit.placements()) {
    json item;
    if (const auto* c = std::get_if<Component>(&p.element)) {
      item = write_component(*c);
    } else {
      item = write_circuit(*std::get<std::shared_ptr<const Circuit>>(p.element));
      item["type"] = "CIRCUIT";
    }
    item["offset"] = p.offset;
    components.push_back(std::move(item));
  }
  j["components"] = std::move(components);
  return j;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    int line = 0;
    int column = 0;
    position_of(text, e.byte > 0 ? e.byte - 1 : 0, line, column);
    throw ParseError("malformed circuit file", line, column);
  }
  return read_circuit(j, "circuit");
}

std::string serialize_circuit(const Circuit& circuit) {
  return write_circuit(circuit).dump(2) + "\n";
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_circuit(buffer.str());
}

void save_circuit(const std::string& path, const Circuit& circuit) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << serialize_circuit(circuit);
}

}  // namespace photonsim
