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

#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "photonsim/matrix.hpp"

namespace photonsim {

struct BeamSplitterPhases {
  double phi_a = 0;
  double phi_b = 0;
  double phi_d = 0;
};

// [[e^{i phi_a} cos t, i e^{i phi_b} sin t],
//  [i e^{i (phi_a - phi_b + phi_d)} sin t, e^{i phi_d} cos t]]
// Reflectivity R = cos^2 t = |u00|^2.
struct BeamSplitter {
  double theta = std::numbers::pi / 4;
  BeamSplitterPhases phases;
  std::optional<double> reflectivity;  // remembered for serialization only

  static BeamSplitter from_theta(double theta, BeamSplitterPhases phases = {});
  static BeamSplitter from_reflectivity(double r, BeamSplitterPhases phases = {});
};

struct PhaseShifter {
  double phi = 0;
};

// Mode k is routed to mode perm[k].
struct Permutation {
  std::vector<int> perm;
};

// Retardance delta, fast-axis angle xi; acts on the (H, V) pair of one spatial mode.
struct WavePlate {
  double delta = 0;
  double xi = 0;
};

// Transmits H and reflects V across two spatial modes.
struct PolarisingBeamSplitter {};

struct PolarisationRotator {
  double delta = 0;
};

// Delays one spatial mode by a whole number of source periods.
struct TimeDelay {
  int periods = 1;
};

using Component = std::variant<BeamSplitter, PhaseShifter, Permutation, WavePlate,
                               PolarisingBeamSplitter, PolarisationRotator, TimeDelay>;

// Number of spatial modes spanned.
int arity(const Component& c);
std::string_view type_name(const Component& c);
bool is_polarisation_component(const Component& c);

// Matrix of the component in its own basis: spatial modes for BS/PS/PERM,
// (H, V) for WP/PR, (H0, V0, H1, V1) for PBS. Throws for TimeDelay.
ComplexMatrix component_matrix(const Component& c);
Unitary component_unitary(const Component& c);

class Circuit;

struct Placement {
  int offset;
  std::variant<Component, std::shared_ptr<const Circuit>> element;
};

class Circuit {
 public:
  explicit Circuit(int modes, std::string name = {});

  Circuit& add(int offset, Component component);
  Circuit& add(int offset, const Circuit& subcircuit);

  int modes() const { return modes_; }
  const std::string& name() const { return name_; }
  const std::vector<Placement>& placements() const { return placements_; }
  bool is_time_circuit() const { return time_circuit_; }
  bool has_polarisation() const { return polarised_; }

 private:
  int modes_;
  std::string name_;
  std::vector<Placement> placements_;
  bool time_circuit_ = false;
  bool polarised_ = false;
};

struct FlatComponent {
  int offset;
  const Component* component;
};

// Components in application order with absolute offsets; nested circuits inlined.
std::vector<FlatComponent> flatten(const Circuit& circuit);

// A dense block acting on modes [offset, offset + matrix.rows()).
struct ModeOperation {
  int offset;
  ComplexMatrix matrix;
};

enum class ModeSpace { Spatial, Polarised };

// Spatial lowering rejects polarisation components. Polarised lowering maps
// spatial mode i to modes (2i, 2i+1) and tensors spatial blocks with I_2.
std::vector<ModeOperation> lower(const Circuit& circuit, ModeSpace space);

// U = ... U(c2) U(c1): the first placement acts first.
Unitary compute_unitary(const Circuit& circuit);
// Unitary over 2m modes for circuits with polarisation components.
Unitary compute_polarised_unitary(const Circuit& circuit);

Circuit decompose_triangular(const Unitary& u);
Circuit decompose_rectangular(const Unitary& u);

}  // namespace photonsim
