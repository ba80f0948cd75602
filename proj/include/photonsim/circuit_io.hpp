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

#pragma once

#include <string>
#include <string_view>

#include "photonsim/circuit.hpp"

namespace photonsim {

// JSON document: {"modes": m, "name": "...", "components": [{"type": "BS",
// "offset": 0, "R": 0.5, "phi_b": 3.14}, ...]}. Types are BS, PS, PERM, WP,
// PBS, PR, TD and CIRCUIT (a nested document with its own "components").
Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& circuit);

Circuit load_circuit(const std::string& path);
void save_circuit(const std::string& path, const Circuit& circuit);

}  // namespace photonsim
