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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "photonsim/circuit.hpp"
#include "photonsim/circuit_io.hpp"
#include "photonsim/error.hpp"
#include "photonsim/reference_circuits.hpp"
#include "test_support.hpp"

using namespace photonsim;
using photonsim::testing::max_abs_diff;
using Complex = std::complex<double>;
using std::numbers::pi;

TEST_CASE("balanced beam splitter matrix") {
  const ComplexMatrix u = component_matrix(BeamSplitter{});
  ComplexMatrix expected(2, 2);
  expected << 1, Complex(0, 1), Complex(0, 1), 1;
  expected /= std::sqrt(2.0);
  CHECK(max_abs_diff(u, expected) < 1e-15);
}

TEST_CASE("beam splitter reflectivity is the top-left intensity") {
  for (double r : {0.0, 0.1, 1.0 / 3, 0.5, 2.0 / 3, 1.0}) {
    const ComplexMatrix u = component_matrix(BeamSplitter::from_reflectivity(r));
    CHECK(std::norm(u(0, 0)) == doctest::Approx(r).epsilon(1e-14));
  }
  const ComplexMatrix u = component_matrix(BeamSplitter::from_reflectivity(2.0 / 3, {0, pi, 0}));
  CHECK(std::abs(u(0, 0) - std::sqrt(2.0 / 3)) < 1e-15);
  CHECK(unitarity_defect(u) < 1e-14);
  CHECK_THROWS_AS(BeamSplitter::from_reflectivity(1.5), InvalidArgument);
  CHECK_THROWS_AS(BeamSplitter::from_reflectivity(-0.1), InvalidArgument);
}

TEST_CASE("generic beam splitter phases are unitary") {
  const BeamSplitter bs = BeamSplitter::from_theta(0.37, {0.2, -1.1, 2.5});
  CHECK(unitarity_defect(component_matrix(bs)) < 1e-14);
}

TEST_CASE("phase shifter, permutation and polarisation components") {
  CHECK(std::abs(component_matrix(PhaseShifter{pi})(0, 0) + 1.0) < 1e-15);

  const ComplexMatrix p = component_matrix(Permutation{{2, 0, 1}});
  // photon in mode 0 goes to mode 2
  CHECK(p(2, 0) == Complex(1));
  CHECK(p(0, 1) == Complex(1));
  CHECK(p(1, 2) == Complex(1));

  ComplexMatrix hwp(2, 2);
  hwp << 0, Complex(0, 1), Complex(0, 1), 0;
  CHECK(max_abs_diff(component_matrix(WavePlate{pi / 2, pi / 4}), hwp) < 1e-15);

  const ComplexMatrix pbs = component_matrix(PolarisingBeamSplitter{});
  CHECK(unitarity_defect(pbs) == 0.0);
  CHECK(pbs(2, 0) == Complex(1));  // H in port 0 leaves through port 1
  CHECK(pbs(1, 1) == Complex(1));  // V in port 0 stays

  CHECK(unitarity_defect(component_matrix(PolarisationRotator{0.3})) < 1e-15);
  CHECK_THROWS_AS(component_matrix(TimeDelay{2}), CapabilityError);
}

TEST_CASE("arity and type names") {
  CHECK(arity(BeamSplitter{}) == 2);
  CHECK(arity(PhaseShifter{}) == 1);
  CHECK(arity(Permutation{{1, 0, 3, 2}}) == 4);
  CHECK(arity(PolarisingBeamSplitter{}) == 2);
  CHECK(arity(TimeDelay{1}) == 1);
  CHECK(type_name(WavePlate{}) == "WP");
  CHECK(type_name(TimeDelay{}) == "TD");
}

TEST_CASE("the reference CNOT reproduces its published unitary") {
  const Unitary u = compute_unitary(ralph_cnot());
  const ComplexMatrix expected = photonsim::testing::cnot_reference_unitary();
  CHECK(max_abs_diff(u.matrix(), expected) < 1e-12);
  CHECK(std::abs(u(0, 0) - std::sqrt(3.0) / 3) < 1e-12);
  CHECK(std::abs(u(0, 1) - Complex(0, -std::sqrt(6.0) / 3)) < 1e-12);
  CHECK(std::abs(u(5, 5) + std::sqrt(3.0) / 3) < 1e-12);
}

TEST_CASE("placement checks") {
  Circuit c(6);
  CHECK_THROWS_AS(c.add(5, BeamSplitter{}), InvalidArgument);
  CHECK_THROWS_AS(c.add(-1, PhaseShifter{}), InvalidArgument);
  CHECK_THROWS_AS(c.add(0, Permutation{{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(c.add(0, TimeDelay{0}), InvalidArgument);
  CHECK_THROWS_AS(c.add(0, PhaseShifter{std::nan("")}), InvalidArgument);
  CHECK_THROWS_AS(c.add(1, Circuit(6)), InvalidArgument);
  CHECK_THROWS_AS(Circuit(0), InvalidArgument);
  CHECK(c.placements().empty());
}

TEST_CASE("empty circuit is the identity and phases add") {
  CHECK(compute_unitary(Circuit(4)).matrix() == ComplexMatrix::Identity(4, 4));
  Circuit c(1);
  c.add(0, PhaseShifter{0.4}).add(0, PhaseShifter{1.1});
  CHECK(std::abs(compute_unitary(c)(0, 0) - std::polar(1.0, 1.5)) < 1e-15);
}

TEST_CASE("first placement acts first") {
  Circuit c(2);
  c.add(0, PhaseShifter{0.7}).add(0, BeamSplitter::from_theta(0.3));
  const ComplexMatrix expected =
      component_matrix(BeamSplitter::from_theta(0.3)) * embed(component_matrix(PhaseShifter{0.7}), 0, 2);
  CHECK(max_abs_diff(compute_unitary(c).matrix(), expected) < 1e-15);
}

TEST_CASE("nesting preserves order and matches the flat circuit") {
  Circuit inner(2, "inner");
  inner.add(0, PhaseShifter{0.5}).add(0, BeamSplitter::from_theta(0.2)).add(1, PhaseShifter{-0.3});
  Circuit nested(4);
  nested.add(0, BeamSplitter{}).add(1, inner).add(2, BeamSplitter::from_theta(1.0));
  Circuit flat(4);
  flat.add(0, BeamSplitter{})
      .add(1, PhaseShifter{0.5})
      .add(1, BeamSplitter::from_theta(0.2))
      .add(2, PhaseShifter{-0.3})
      .add(2, BeamSplitter::from_theta(1.0));
  const auto items = flatten(nested);
  REQUIRE(items.size() == 5);
  CHECK(items[1].offset == 1);
  CHECK(items[3].offset == 2);
  CHECK(type_name(*items[2].component) == "BS");
  CHECK(max_abs_diff(compute_unitary(nested).matrix(), compute_unitary(flat).matrix()) < 1e-15);
}

TEST_CASE("time and polarisation circuits are flagged") {
  Circuit inner(1);
  inner.add(0, TimeDelay{2});
  Circuit c(2);
  c.add(0, BeamSplitter{}).add(1, inner);
  CHECK(c.is_time_circuit());
  CHECK_THROWS_AS(compute_unitary(c), CapabilityError);

  Circuit p(2);
  p.add(0, WavePlate{pi / 2, pi / 8}).add(0, PolarisingBeamSplitter{});
  CHECK(p.has_polarisation());
  CHECK_FALSE(p.is_time_circuit());
  CHECK_THROWS_AS(compute_unitary(p), CapabilityError);
  const Unitary pu = compute_polarised_unitary(p);
  CHECK(pu.modes() == 4);
}

TEST_CASE("polarised lowering doubles plain components per polarisation") {
  Circuit c(2);
  c.add(0, BeamSplitter::from_theta(0.4, {0.1, 0.2, 0.3}));
  const ComplexMatrix plain = compute_unitary(c).matrix();
  const ComplexMatrix pol = compute_polarised_unitary(c).matrix();
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          CHECK(pol(2 * r + a, 2 * s + b) == (a == b ? plain(r, s) : Complex(0)));
        }
      }
    }
  }
}

TEST_CASE("circuit files round trip losslessly") {
  Circuit sub(2, "sub");
  sub.add(0, BeamSplitter::from_theta(0.1234567890123456789, {1.0 / 3, 0, -2.0 / 7}))
      .add(1, PhaseShifter{std::sqrt(2.0)});
  Circuit c(5, "demo");
  c.add(0, BeamSplitter::from_reflectivity(2.0 / 3, {0, pi, 0}))
      .add(2, Permutation{{2, 0, 1}})
      .add(3, sub)
      .add(1, WavePlate{pi / 2, pi / 8})
      .add(0, PolarisingBeamSplitter{})
      .add(4, PolarisationRotator{0.25})
      .add(2, TimeDelay{3});
  const std::string text = serialize_circuit(c);
  const Circuit back = parse_circuit(text);
  CHECK(serialize_circuit(back) == text);
  CHECK(back.name() == "demo");
  CHECK(back.modes() == 5);
  CHECK(back.is_time_circuit());
  const auto a = flatten(c);
  const auto b = flatten(back);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].offset == b[i].offset);
    if (!std::holds_alternative<TimeDelay>(*a[i].component)) {
      CHECK(component_matrix(*a[i].component) == component_matrix(*b[i].component));
    }
  }
}

TEST_CASE("circuit parse errors") {
  const auto line_of = [](const std::string& text) {
    try {
      parse_circuit(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("{\n  \"modes\": 2,\n  \"components\": [\n    {\"type\": \"BS\" \"offset\": 0}\n  ]\n}") == 4);
  CHECK(line_of("{\"modes\": 2,") == 1);

  const char* bad[] = {
      R"({"components": []})",
      R"({"modes": 0, "components": []})",
      R"({"modes": 2, "components": [{"type": "XX", "offset": 0}]})",
      R"({"modes": 2, "components": [{"type": "BS", "offset": 1, "theta": 0.1}]})",
      R"({"modes": 2, "components": [{"type": "BS", "offset": 0, "theta": 0.1, "R": 0.5}]})",
      R"({"modes": 2, "components": [{"type": "BS", "offset": 0, "R": 2}]})",
      R"({"modes": 2, "components": [{"type": "PS", "offset": 0, "phi": 1, "bogus": 1}]})",
      R"({"modes": 2, "components": [{"type": "PERM", "offset": 0, "perm": [0, 2]}]})",
      R"({"modes": 2, "components": [{"type": "TD", "offset": 0, "periods": 1.5}]})",
      R"({"modes": 2, "components": [{"type": "PS", "offset": 0, "phi": "x"}]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_circuit(text), ParseError);
  }
}
