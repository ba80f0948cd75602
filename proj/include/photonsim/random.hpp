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

#include <cstdint>
#include <random>

#include "photonsim/matrix.hpp"

namespace photonsim {

using Rng = std::mt19937_64;

// Independent generator for sub-stream `stream` of `seed` (SplitMix64 mixing).
Rng split_stream(std::uint64_t seed, std::uint64_t stream);

// Seed drawn from the operating system, for runs without an explicit seed.
std::uint64_t random_seed();

// Uniform double in [0, 1).
inline double uniform01(Rng& rng) { return std::generate_canonical<double, 64>(rng); }

// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of
// diag(R) folded back into Q.
Unitary haar_unitary(int m, Rng& rng);

}  // namespace photonsim
