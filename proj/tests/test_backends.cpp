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

#include "photonsim/backends.hpp"
#include "photonsim/error.hpp"
#include "photonsim/random.hpp"
#include "photonsim/reference_circuits.hpp"
#include "test_support.hpp"

using namespace photonsim;
using Complex = std::complex<double>;
using std::numbers::pi;

namespace {

Unitary balanced_bs() { return component_unitary(BeamSplitter{}); }

// Brute-force oracle: every output amplitude from the cofactor-expansion permanent.
Distribution oracle_distribution(const Unitary& u, const FockState& input) {
  Distribution d;
  double norm = 1;
  for (int j = 0; j < input.modes(); ++j) norm *= std::tgamma(input[j] + 1);
  for (const FockState& s : FockBasis(u.modes(), input.photons()).states()) {
    double f = norm;
    for (int i = 0; i < s.modes(); ++i) f *= std::tgamma(s[i] + 1);
    const Complex per = photonsim::testing::laplace_permanent(submatrix_ts(u.matrix(), input, s));
    d.add(s, std::norm(per) / f);
  }
  return d;
}

double max_outcome_diff(const Distribution& a, const Distribution& b) {
  double worst = 0;
  for (const auto& [s, p] : a.probabilities()) worst = std::max(worst, std::abs(p - b[s]));
  for (const auto& [s, p] : b.probabilities()) worst = std::max(worst, std::abs(p - a[s]));
  return worst;
}

Circuit random_circuit(int m, Rng& rng) {
  Circuit c(m);
  for (int k = 0; k < 3 * m; ++k) {
    const int offset = static_cast<int>(uniform01(rng) * (m - 1));
    c.add(offset, BeamSplitter::from_theta(uniform01(rng) * pi,
                                           {uniform01(rng) * 2 * pi, uniform01(rng) * 2 * pi,
                                            uniform01(rng) * 2 * pi}));
    c.add(static_cast<int>(uniform01(rng) * m), PhaseShifter{uniform01(rng) * 2 * pi});
  }
  return c;
}

}  // namespace

TEST_CASE("amplitudes of simple unitaries") {
  const Unitary id = Unitary::identity(3);
  CHECK(amplitude(id, {1, 0, 2}, {1, 0, 2}) == Complex(1));
  CHECK(amplitude(id, {1, 0, 2}, {2, 0, 1}) == Complex(0));

  const Unitary bs = balanced_bs();
  CHECK(std::abs(amplitude(bs, {1, 1}, {1, 1})) < 1e-15);
  CHECK(std::abs(amplitude(bs, {1, 1}, {2, 0}) - Complex(0, 1 / std::sqrt(2.0))) < 1e-15);
  CHECK(probability(bs, {1, 1}, {0, 2}) == doctest::Approx(0.5));

  const Unitary cnot = compute_unitary(ralph_cnot());
  CHECK(probability(cnot, {0, 0, 1, 1, 0, 0}, {0, 0, 1, 0, 1, 0}) == doctest::Approx(1.0 / 9));

  CHECK_THROWS_AS(amplitude(bs, {1, 1}, {1, 0}), InvalidArgument);
  CHECK_THROWS_AS(amplitude(bs, {1, 0, 0}, {1, 0, 0}), InvalidArgument);
}

TEST_CASE("naive, SLOS and stepper agree with the permanent oracle") {
  for (int trial = 0; trial < 12; ++trial) {
    Rng rng = split_stream(900, trial);
    const int m = 3 + trial % 6;
    const Circuit c = random_circuit(m, rng);
    const Unitary u = compute_unitary(c);
    std::vector<int> occ(m, 0);
    const int n = 1 + trial % 4;
    for (int k = 0; k < n; ++k) occ[(k * 2 + trial) % m] += 1;
    const FockState input(occ);
    CAPTURE(input.to_string());
    const Distribution oracle = oracle_distribution(u, input);
    const Distribution naive = naive_distribution(u, input);
    const Distribution slos = slos_full_distribution(u, input);
    const Distribution stepper = stepper_distribution(c, input);
    CHECK(max_outcome_diff(naive, oracle) < 1e-9);
    CHECK(max_outcome_diff(slos, oracle) < 1e-9);
    CHECK(max_outcome_diff(stepper, oracle) < 1e-9);
    CHECK(slos.total_mass() == doctest::Approx(1.0).epsilon(1e-9));
    for (const auto& [s, p] : slos.probabilities()) CHECK(s.photons() == n);
  }
}

TEST_CASE("SLOS on Haar unitaries matches single-output probabilities") {
  Rng rng = split_stream(4, 4);
  const Unitary u = haar_unitary(6, rng);
  const FockState input{1, 0, 1, 0, 1, 0};
  const ComplexVector amps = slos_amplitudes(u, input);
  const FockBasis basis(6, 3);
  REQUIRE(static_cast<std::uint64_t>(amps.size()) == basis.size());
  for (std::uint64_t i = 0; i < basis.size(); ++i) {
    CHECK(std::abs(amps(i) - amplitude(u, input, basis[i])) < 1e-10);
  }
  const StateVector psi = slos_evolve(u, input);
  CHECK(psi.norm_squared() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("SLOS special cases and memory budget") {
  const Distribution point = slos_full_distribution(Unitary::identity(4), {0, 2, 1, 0});
  CHECK(point.size() == fock_dim(4, 3));
  CHECK(point[FockState{0, 2, 1, 0}] == doctest::Approx(1.0));
  CHECK(point.total_mass() == doctest::Approx(1.0));

  const Distribution hom = slos_full_distribution(balanced_bs(), {1, 1});
  CHECK(hom[FockState{2, 0}] == doctest::Approx(0.5));
  CHECK(hom[FockState{0, 2}] == doctest::Approx(0.5));
  CHECK(hom[FockState{1, 1}] < 1e-30);

  Rng rng = split_stream(5, 0);
  const Unitary u = haar_unitary(12, rng);
  CHECK_THROWS_AS(slos_full_distribution(u, FockState{1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
                                         SlosOptions{1024}),
                  CapacityError);
}

TEST_CASE("stepper phase action and empty circuit") {
  StateVector psi;
  psi.add({2, 0}, 0.6);
  psi.add({1, 1}, Complex(0, 0.8));
  Circuit ps(2);
  ps.add(0, PhaseShifter{0.3});
  const StateVector out = stepper_evolve(ps, psi);
  CHECK(std::abs(out[FockState{2, 0}] - 0.6 * std::polar(1.0, 0.6)) < 1e-14);
  CHECK(std::abs(out[FockState{1, 1}] - Complex(0, 0.8) * std::polar(1.0, 0.3)) < 1e-14);

  const StateVector same = stepper_evolve(Circuit(2), psi);
  CHECK(same[FockState{2, 0}] == psi[FockState{2, 0}]);
  CHECK(same[FockState{1, 1}] == psi[FockState{1, 1}]);
}

TEST_CASE("stepper matches SLOS on the CNOT logical inputs") {
  const Circuit c = ralph_cnot();
  const Unitary u = compute_unitary(c);
  for (const auto& state : cnot_logical_states()) {
    CAPTURE(state.label);
    CHECK(max_outcome_diff(stepper_distribution(c, state.state),
                           slos_full_distribution(u, state.state)) < 1e-10);
    const StateVector psi = stepper_evolve(c, StateVector(state.state));
    CHECK(psi.norm_squared() == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("stepper handles polarisation through mode doubling") {
  Circuit c(1);
  c.add(0, WavePlate{pi / 2, pi / 4});
  const Distribution d = stepper_distribution(c, FockState::parse("|{P:H}>"));
  CHECK(d[FockState{0, 1}] == doctest::Approx(1.0));

  Circuit pbs(2);
  pbs.add(0, PolarisingBeamSplitter{});
  const Distribution split = stepper_distribution(pbs, FockState::parse("|{P:H},{P:V}>"));
  // expanded modes are (0H, 0V, 1H, 1V): H crosses, V stays
  CHECK(split[FockState{0, 0, 1, 1}] == doctest::Approx(1.0));

  CHECK_THROWS_AS(stepper_distribution(pbs, FockState{1, 0}), CapabilityError);
}

TEST_CASE("annotated photons interfere only within a tag") {
  const Unitary bs = balanced_bs();
  const Distribution distinct = simulate_annotated(bs, FockState::parse("|{a},{b}>"));
  CHECK(distinct[FockState{1, 1}] == doctest::Approx(0.5));
  CHECK(distinct[FockState{2, 0}] == doctest::Approx(0.25));
  const Distribution same = simulate_annotated(bs, FockState::parse("|{a},{a}>"));
  CHECK(same[FockState{1, 1}] < 1e-30);

  Rng rng = split_stream(8, 0);
  const Unitary u = haar_unitary(5, rng);
  const Distribution tagged = simulate_annotated(u, FockState::parse("|{x},0,{x,x},0,0>"));
  CHECK(max_outcome_diff(tagged, slos_full_distribution(u, {1, 0, 2, 0, 0})) < 1e-12);
}

TEST_CASE("CC2017 sampler reproduces exact distributions") {
  Rng rng = split_stream(10, 0);
  const Unitary u = haar_unitary(6, rng);
  const FockState input{1, 1, 0, 1, 0, 0};
  const SampleRecord samples = sample_cc2017(u, input, 100000, 77);
  CHECK(samples.count() == 100000);
  CHECK(samples.seed == 77);
  for (const auto& s : samples.outcomes) {
    if (s.photons() != 3 || s.modes() != 6) FAIL("bad outcome " << s.to_string());
  }
  const double tvd = total_variation_distance(empirical_distribution(samples),
                                              slos_full_distribution(u, input));
  CHECK(tvd < 0.05);
}

TEST_CASE("CC2017 single photon frequencies lie within three sigma") {
  Rng rng = split_stream(11, 0);
  const Unitary u = haar_unitary(5, rng);
  const int count = 100000;
  const Distribution d = empirical_distribution(sample_cc2017(u, {0, 0, 1, 0, 0}, count, 3));
  for (int j = 0; j < 5; ++j) {
    const double p = std::norm(u(j, 2));
    std::vector<int> occ(5, 0);
    occ[j] = 1;
    const double sigma = std::sqrt(p * (1 - p) / count);
    CHECK(std::abs(d[FockState(occ)] - p) <= 3 * sigma + 1e-12);
  }
}

TEST_CASE("CC2017 determinism, thread independence and trivial inputs") {
  Rng rng = split_stream(12, 0);
  const Unitary u = haar_unitary(5, rng);
  const FockState input{2, 0, 1, 0, 1};
  const SampleRecord a = sample_cc2017(u, input, 2000, 5, 1);
  const SampleRecord b = sample_cc2017(u, input, 2000, 5, 3);
  CHECK(a.outcomes == b.outcomes);
  const SampleRecord c = sample_cc2017(u, input, 2000, 6, 1);
  CHECK(a.outcomes != c.outcomes);

  for (const auto& s : sample_cc2017(Unitary::identity(4), {1, 0, 2, 1}, 50, 1).outcomes) {
    CHECK(s == FockState{1, 0, 2, 1});
  }
  for (const auto& s : sample_cc2017(u, FockState::vacuum(5), 10, 1).outcomes) {
    CHECK(s == FockState::vacuum(5));
  }
}

TEST_CASE("capability matrix") {
  CHECK(supports(Backend::Naive, Task::Sampling));
  CHECK(supports(Backend::Naive, Task::Amplitude));
  CHECK_FALSE(supports(Backend::Naive, Task::TimeCircuit));
  CHECK(supports(Backend::Slos, Task::FullDistribution));
  CHECK(supports(Backend::Slos, Task::Amplitude));
  CHECK_FALSE(supports(Backend::Slos, Task::Sampling));
  CHECK(supports(Backend::Stepper, Task::TimeCircuit));
  CHECK_FALSE(supports(Backend::Stepper, Task::Sampling));
  CHECK(supports(Backend::CliffordClifford2017, Task::Sampling));
  CHECK_FALSE(supports(Backend::CliffordClifford2017, Task::Amplitude));
  CHECK_FALSE(supports(Backend::CliffordClifford2017, Task::FullDistribution));
  CHECK_THROWS_AS(require_support(Backend::CliffordClifford2017, Task::Amplitude), CapabilityError);
  for (Backend b : {Backend::Naive, Backend::Slos, Backend::Stepper, Backend::CliffordClifford2017}) {
    CHECK(parse_backend(backend_name(b)) == b);
  }
  CHECK_THROWS_AS(parse_backend("quantum"), InvalidArgument);
}

TEST_CASE("distributions sort and sample deterministically") {
  Distribution d;
  d.add({0, 2}, 0.25);
  d.add({2, 0}, 0.25);
  d.add({1, 1}, 0.5);
  const auto sorted = d.sorted();
  CHECK(sorted[0].first == FockState{1, 1});
  CHECK(sorted[1].first == FockState{2, 0});
  CHECK(sorted[2].first == FockState{0, 2});
  const SampleRecord a = sample_distribution(d, 1000, 9);
  CHECK(a.outcomes == sample_distribution(d, 1000, 9).outcomes);
  CHECK(total_variation_distance(empirical_distribution(a), d) < 0.06);
  CHECK(total_variation_distance(d, d) == 0.0);
}
