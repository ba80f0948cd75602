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

#include "photonsim/circuit.hpp"

#include <cmath>

#include "photonsim/error.hpp"

namespace photonsim {

namespace {

using namespace std::complex_literals;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require_finite(double v, std::string_view what) {
  if (!std::isfinite(v)) throw InvalidArgument(std::string(what) + " must be finite");
}

void validate(const Component& c) {
  std::visit(Overloaded{
                 [](const BeamSplitter& bs) {
                   require_finite(bs.theta, "theta");
                   require_finite(bs.phases.phi_a, "phi_a");
                   require_finite(bs.phases.phi_b, "phi_b");
                   require_finite(bs.phases.phi_d, "phi_d");
                 },
                 [](const PhaseShifter& ps) { require_finite(ps.phi, "phi"); },
                 [](const Permutation& p) {
                   std::vector<bool> seen(p.perm.size(), false);
                   for (int v : p.perm) {
                     if (v < 0 || v >= static_cast<int>(p.perm.size()) || seen[v]) {
                       throw InvalidArgument("not a permutation of 0..k-1");
                     }
                     seen[v] = true;
                   }
                   if (p.perm.empty()) throw InvalidArgument("empty permutation");
                 },
                 [](const WavePlate& wp) {
                   require_finite(wp.delta, "delta");
                   require_finite(wp.xi, "xi");
                 },
                 [](const PolarisingBeamSplitter&) {},
                 [](const PolarisationRotator& pr) { require_finite(pr.delta, "delta"); },
                 [](const TimeDelay& td) {
                   if (td.periods < 1) throw InvalidArgument("time delay must be >= 1 period");
                 },
             },
             c);
}

}  // namespace

BeamSplitter BeamSplitter::from_theta(double theta, BeamSplitterPhases phases) {
  BeamSplitter bs;
  bs.theta = theta;
  bs.phases = phases;
  return bs;
}

BeamSplitter BeamSplitter::from_reflectivity(double r, BeamSplitterPhases phases) {
  if (!(r >= 0 && r <= 1)) throw InvalidArgument("reflectivity must lie in [0, 1]");
  BeamSplitter bs;
  bs.theta = std::acos(std::sqrt(r));
  bs.phases = phases;
  bs.reflectivity = r;
  return bs;
}

int arity(const Component& c) {
  return std::visit(Overloaded{
                        [](const BeamSplitter&) { return 2; },
                        [](const PhaseShifter&) { return 1; },
                        [](const Permutation& p) { return static_cast<int>(p.perm.size()); },
                        [](const WavePlate&) { return 1; },
                        [](const PolarisingBeamSplitter&) { return 2; },
                        [](const PolarisationRotator&) { return 1; },
                        [](const TimeDelay&) { return 1; },
                    },
                    c);
}

std::string_view type_name(const Component& c) {
  static constexpr std::string_view names[] = {"BS", "PS", "PERM", "WP", "PBS", "PR", "TD"};
  return names[c.index()];
}

bool is_polarisation_component(const Component& c) {
  return std::holds_alternative<WavePlate>(c) ||
         std::holds_alternative<PolarisingBeamSplitter>(c) ||
         std::holds_alternative<PolarisationRotator>(c);
}

ComplexMatrix component_matrix(const Component& c) {
  return std::visit(
      Overloaded{
          [](const BeamSplitter& bs) -> ComplexMatrix {
            const double co = std::cos(bs.theta);
            const double si = std::sin(bs.theta);
            const auto& p = bs.phases;
            ComplexMatrix u(2, 2);
            u(0, 0) = std::polar(co, p.phi_a);
            u(0, 1) = 1i * std::polar(si, p.phi_b);
            u(1, 0) = 1i * std::polar(si, p.phi_a - p.phi_b + p.phi_d);
            u(1, 1) = std::polar(co, p.phi_d);
            return u;
          },
          [](const PhaseShifter& ps) -> ComplexMatrix {
            ComplexMatrix u(1, 1);
            u(0, 0) = std::polar(1.0, ps.phi);
            return u;
          },
          [](const Permutation& p) -> ComplexMatrix {
            const auto k = static_cast<Eigen::Index>(p.perm.size());
            ComplexMatrix u = ComplexMatrix::Zero(k, k);
            for (Eigen::Index i = 0; i < k; ++i) u(p.perm[i], i) = 1.0;
            return u;
          },
          [](const WavePlate& wp) -> ComplexMatrix {
            const double sd = std::sin(wp.delta);
            const double cd = std::cos(wp.delta);
            const double c2 = std::cos(2 * wp.xi);
            const double s2 = std::sin(2 * wp.xi);
            ComplexMatrix u(2, 2);
            u(0, 0) = std::complex<double>(cd, sd * c2);
            u(0, 1) = 1i * (sd * s2);
            u(1, 0) = 1i * (sd * s2);
            u(1, 1) = std::complex<double>(cd, -sd * c2);
            return u;
          },
          [](const PolarisingBeamSplitter&) -> ComplexMatrix {
            ComplexMatrix u = ComplexMatrix::Zero(4, 4);
            u(0, 2) = u(2, 0) = 1.0;
            u(1, 1) = u(3, 3) = 1.0;
            return u;
          },
          [](const PolarisationRotator& pr) -> ComplexMatrix {
            ComplexMatrix u(2, 2);
            u << std::cos(pr.delta), std::sin(pr.delta), -std::sin(pr.delta), std::cos(pr.delta);
            return u;
          },
          [](const TimeDelay&) -> ComplexMatrix {
            throw CapabilityError("a time delay is not a mode unitary");
          },
      },
      c);
}

Unitary component_unitary(const Component& c) { return Unitary(component_matrix(c)); }

Circuit::Circuit(int modes, std::string name) : modes_(modes), name_(std::move(name)) {
  if (modes < 1) throw InvalidArgument("a circuit needs at least one mode");
}

Circuit& Circuit::add(int offset, Component component) {
  validate(component);
  const int k = arity(component);
  if (offset < 0 || offset + k > modes_) {
    throw InvalidArgument(std::string(type_name(component)) + " spanning " + std::to_string(k) +
                          " modes does not fit at offset " + std::to_string(offset) + " of a " +
                          std::to_string(modes_) + "-mode circuit");
  }
  time_circuit_ |= std::holds_alternative<TimeDelay>(component);
  polarised_ |= is_polarisation_component(component);
  placements_.push_back({offset, std::move(component)});
  return *this;
}

Circuit& Circuit::add(int offset, const Circuit& subcircuit) {
  if (offset < 0 || offset + subcircuit.modes() > modes_) {
    throw InvalidArgument("subcircuit of " + std::to_string(subcircuit.modes()) +
                          " modes does not fit at offset " + std::to_string(offset));
  }
  time_circuit_ |= subcircuit.is_time_circuit();
  polarised_ |= subcircuit.has_polarisation();
  placements_.push_back({offset, std::make_shared<const Circuit>(subcircuit)});
  return *this;
}

namespace {

void flatten_into(const Circuit& circuit, int base, std::vector<FlatComponent>& out) {
  for (const auto& p : circuit.placements()) {
    if (const auto* c = std::get_if<Component>(&p.element)) {
      out.push_back({base + p.offset, c});
    } else {
      flatten_into(*std::get<std::shared_ptr<const Circuit>>(p.element), base + p.offset, out);
    }
  }
}

ComplexMatrix kron_identity2(const ComplexMatrix& u) {
  const auto k = u.rows();
  ComplexMatrix out = ComplexMatrix::Zero(2 * k, 2 * k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      out(2 * r, 2 * c) = u(r, c);
      out(2 * r + 1, 2 * c + 1) = u(r, c);
    }
  }
  return out;
}

Unitary compose(const std::vector<ModeOperation>& ops, int m) {
  ComplexMatrix u = ComplexMatrix::Identity(m, m);
  for (const auto& op : ops) {
    const auto k = op.matrix.rows();
    u.middleRows(op.offset, k) = (op.matrix * u.middleRows(op.offset, k)).eval();
  }
  return Unitary(std::move(u));
}

}  // namespace

std::vector<FlatComponent> flatten(const Circuit& circuit) {
  std::vector<FlatComponent> out;
  flatten_into(circuit, 0, out);
  return out;
}

std::vector<ModeOperation> lower(const Circuit& circuit, ModeSpace space) {
  if (circuit.is_time_circuit()) {
    throw CapabilityError("time circuits must be unrolled over time bins first");
  }
  std::vector<ModeOperation> ops;
  for (const auto& [offset, c] : flatten(circuit)) {
    const bool polarisation = is_polarisation_component(*c);
    if (space == ModeSpace::Spatial) {
      if (polarisation) {
        throw CapabilityError(std::string(type_name(*c)) +
                              " acts on polarisation; use polarised input");
      }
      ops.push_back({offset, component_matrix(*c)});
    } else if (polarisation) {
      ops.push_back({2 * offset, component_matrix(*c)});
    } else {
      ops.push_back({2 * offset, kron_identity2(component_matrix(*c))});
    }
  }
  return ops;
}

Unitary compute_unitary(const Circuit& circuit) {
  return compose(lower(circuit, ModeSpace::Spatial), circuit.modes());
}

Unitary compute_polarised_unitary(const Circuit& circuit) {
  return compose(lower(circuit, ModeSpace::Polarised), 2 * circuit.modes());
}

}  // namespace photonsim
