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
#include <vector>

#include "photonsim/circuit.hpp"
#include "photonsim/gate_analysis.hpp"
#include "photonsim/logical.hpp"
#include "photonsim/vqe.hpp"

namespace photonsim {

// Heralded CNOT on six modes: empty ancillas 0 and 5, control on (1, 2),
// target on (3, 4). Succeeds with probability 1/9.
Circuit ralph_cnot();
// Dual-rail labels 00, 01, 10, 11 for the CNOT's control and target.
std::vector<LabeledState> cnot_logical_states();

// Real Hadamard [[1, 1], [1, -1]] / sqrt(2) on modes (offset, offset + 1).
Circuit& add_hadamard(Circuit& circuit, int offset);

// Heralded CZ on six modes laid out as ancilla, control pair, target pair,
// ancilla. Succeeds with probability 1/9.
Circuit heralded_cz();

// Order-finding core for factoring 15 with base 11 on four dual-rail qubits
// x1 (1, 2), x2 (3, 4), f1 (7, 8), f2 (9, 10); modes 0, 5, 6, 11 are ancillas.
Circuit shor_circuit();
FockState shor_input();
// Qubit order x1, x2, f1, f2.
LogicalEncoding shor_encoding();

// Two-qubit search over spatial mode (first qubit) and polarisation (second
// qubit) of one photon in two spatial modes; `marked` is "00".."11".
Circuit grover_circuit(const std::string& marked);
// Photon in spatial mode 1, horizontal polarisation (element 00).
FockState grover_input();
// Basis over the four polarisation-expanded modes (H0, V0, H1, V1).
LogicalEncoding grover_encoding();

// Two dual-rail qubits on (1, 2) and (3, 4): a tunable Mach-Zehnder with two
// phases on each qubit, the heralded CNOT, then another layer of Mach-Zehnders.
// Eight phase parameters.
CircuitTemplate vqe_ansatz();
FockState vqe_input();
LogicalEncoding vqe_encoding();

}  // namespace photonsim
