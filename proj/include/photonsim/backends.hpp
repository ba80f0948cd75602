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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "photonsim/circuit.hpp"
#include "photonsim/distribution.hpp"
#include "photonsim/matrix.hpp"
#include "photonsim/permanent.hpp"
#include "photonsim/state_vector.hpp"

namespace photonsim {

enum class Backend { Naive, Slos, Stepper, CliffordClifford2017 };

enum class Task { Sampling, SingleOutput, FullDistribution, Amplitude, TimeCircuit };

bool supports(Backend backend, Task task);
// Throws CapabilityError when the back-end cannot perform the task.
void require_support(Backend backend, Task task);

std::string_view backend_name(Backend backend);
Backend parse_backend(std::string_view name);

// <output| U |input> = Perm(U_{T,S}) / sqrt(prod s_i! prod t_j!).
Amplitude amplitude(const Unitary& u, const FockState& input, const FockState& output,
                    const PermanentConfig& config = {});
double probability(const Unitary& u, const FockState& input, const FockState& output,
                   const PermanentConfig& config = {});

// One permanent per output state.
Distribution naive_distribution(const Unitary& u, const FockState& input,
                                const PermanentConfig& config = {});

struct SlosOptions {
  std::size_t memory_budget = std::size_t{4} << 30;
};

// Output amplitudes indexed by canonical rank in FockBasis(m, n).
ComplexVector slos_amplitudes(const Unitary& u, const FockState& input,
                              const SlosOptions& options = {});
StateVector slos_evolve(const Unitary& u, const FockState& input, const SlosOptions& options = {});
// Includes zero-probability outputs.
Distribution slos_full_distribution(const Unitary& u, const FockState& input,
                                    const SlosOptions& options = {});

// Applies lowered operations one by one. Tagged input (P:H / P:V) is expanded
// to polarisation modes and evolved through the polarised lowering.
StateVector stepper_evolve(const Circuit& circuit, const StateVector& psi);
StateVector stepper_apply(std::span<const ModeOperation> ops, const StateVector& psi);
Distribution stepper_distribution(const Circuit& circuit, const FockState& input);

// Exact sampling by sequential conditional marginals. Samples are drawn in
// blocks with independent streams split from the seed, so the record depends
// only on the seed, not on the thread count.
SampleRecord sample_cc2017(const Unitary& u, const FockState& input, std::size_t count,
                           std::uint64_t seed, unsigned threads = 1);

// Photons sharing a tag interfere; different tags are fully distinguishable.
// Returns detector-level (untagged) outcome probabilities.
Distribution simulate_annotated(const Unitary& u, const FockState& input,
                                const SlosOptions& options = {});

}  // namespace photonsim
