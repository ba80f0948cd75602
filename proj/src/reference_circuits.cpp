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

#include "photonsim/reference_circuits.hpp"

#include <numbers>

#include "photonsim/error.hpp"

namespace photonsim {

namespace {

constexpr double kPi = std::numbers::pi;

BeamSplitter bs(double r, double phi_b = 0, double phi_d = 0) {
  return BeamSplitter::from_reflectivity(r, {.phi_a = 0, .phi_b = phi_b, .phi_d = phi_d});
}

// Real beam splitters [[c, s], [s, -c]] and [[c, -s], [-s, c]] up to the
// reflectivity: the two flavours the heralded gates are built from.
BeamSplitter real_bs(double r) { return bs(r, 3 * kPi / 2, kPi); }
BeamSplitter real_bs_flipped(double r) { return bs(r, kPi, 0); }

void add_mach_zehnder(Circuit& c, int offset, double phi_inner, double phi_outer) {
  c.add(offset, bs(0.5));
  c.add(offset, PhaseShifter{phi_inner});
  c.add(offset, bs(0.5));
  c.add(offset, PhaseShifter{phi_outer});
}

}  // namespace

Circuit ralph_cnot() {
  Circuit c(6, "cnot");
  c.add(0, real_bs_flipped(1.0 / 3));
  c.add(3, real_bs(0.5));
  c.add(2, real_bs_flipped(1.0 / 3));
  c.add(4, real_bs(1.0 / 3));
  c.add(3, real_bs(0.5));
  return c;
}

std::vector<LabeledState> cnot_logical_states() {
  return {{"00", FockState{0, 1, 0, 1, 0, 0}},
          {"01", FockState{0, 1, 0, 0, 1, 0}},
          {"10", FockState{0, 0, 1, 1, 0, 0}},
          {"11", FockState{0, 0, 1, 0, 1, 0}}};
}

Circuit& add_hadamard(Circuit& circuit, int offset) { return circuit.add(offset, real_bs(0.5)); }

Circuit heralded_cz() {
  Circuit c(6, "cz");
  c.add(2, PhaseShifter{kPi});
  c.add(0, real_bs_flipped(1.0 / 3));
  c.add(2, real_bs_flipped(1.0 / 3));
  c.add(4, real_bs(1.0 / 3));
  return c;
}

Circuit shor_circuit() {
  // Gather (ancilla, x1, f1, ancilla) into modes 0..5 and (ancilla, x2, f2,
  // ancilla) into modes 6..11 so both CZs act on contiguous blocks.
  const std::vector<int> order{0, 1, 2, 7, 8, 6, 5, 3, 4, 9, 10, 11};
  Permutation gather;
  Permutation scatter;
  gather.perm.resize(order.size());
  scatter.perm.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    gather.perm[order[i]] = static_cast<int>(i);
    scatter.perm[i] = order[i];
  }
  Circuit c(12, "shor");
  for (int q : {1, 3, 7, 9}) add_hadamard(c, q);
  c.add(0, gather);
  c.add(0, heralded_cz());
  c.add(6, heralded_cz());
  c.add(0, scatter);
  add_hadamard(c, 7);
  add_hadamard(c, 9);
  return c;
}

FockState shor_input() { return FockState{0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0}; }

LogicalEncoding shor_encoding() {
  return LogicalEncoding::dual_rail(12, {{1, 2}, {3, 4}, {7, 8}, {9, 10}});
}

Circuit grover_circuit(const std::string& marked) {
  if (marked.size() != 2 || marked.find_first_not_of("01") != std::string::npos) {
    throw InvalidArgument("marked element must be one of 00, 01, 10, 11");
  }
  Circuit c(2, "grover");
  auto spatial_hadamard = [&] { add_hadamard(c, 0); };
  auto polarisation_hadamards = [&] {
    for (int mode : {0, 1}) {
      c.add(mode, WavePlate{kPi / 2, kPi / 8});
      c.add(mode, PhaseShifter{-kPi / 2});
    }
  };
  // Flips the sign of one (spatial, polarisation) element.
  auto oracle = [&](char s, char p) {
    const int mode = s == '0' ? 1 : 0;
    c.add(mode, WavePlate{kPi / 2, 0});
    c.add(mode, PhaseShifter{p == '0' ? kPi / 2 : -kPi / 2});
  };
  spatial_hadamard();
  polarisation_hadamards();
  oracle(marked[0], marked[1]);
  spatial_hadamard();
  polarisation_hadamards();
  oracle('0', '0');
  spatial_hadamard();
  polarisation_hadamards();
  return c;
}

FockState grover_input() { return FockState::annotated({{}, {std::string(kHorizontalTag)}}); }

LogicalEncoding grover_encoding() {
  return LogicalEncoding::from_basis(
      2, {FockState{0, 0, 1, 0}, FockState{0, 0, 0, 1}, FockState{1, 0, 0, 0}, FockState{0, 1, 0, 0}});
}

CircuitTemplate vqe_ansatz() {
  CircuitTemplate t;
  t.parameters = 8;
  t.bind = [](const Eigen::VectorXd& phi) {
    if (phi.size() != 8) throw InvalidArgument("the VQE ansatz takes 8 phases");
    Circuit c(6, "vqe");
    add_mach_zehnder(c, 1, phi(0), phi(1));
    add_mach_zehnder(c, 3, phi(2), phi(3));
    c.add(0, ralph_cnot());
    add_mach_zehnder(c, 1, phi(4), phi(5));
    add_mach_zehnder(c, 3, phi(6), phi(7));
    return c;
  };
  return t;
}

FockState vqe_input() { return FockState{0, 1, 0, 1, 0, 0}; }

LogicalEncoding vqe_encoding() { return LogicalEncoding::dual_rail(6, {{1, 2}, {3, 4}}); }

}  // namespace photonsim
