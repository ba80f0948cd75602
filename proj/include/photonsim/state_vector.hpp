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

#include <complex>
#include <map>

#include "photonsim/fock.hpp"

namespace photonsim {

using Amplitude = std::complex<double>;

inline constexpr double kPruneTolerance = 1e-12;

// Sparse superposition of Fock states sharing one mode count.
class StateVector {
 public:
  StateVector() = default;
  StateVector(const FockState& basis_state);  // NOLINT: a basis state is a state vector

  // Accumulates amplitude onto a basis state.
  void add(const FockState& state, Amplitude amplitude);

  Amplitude operator[](const FockState& state) const;
  int modes() const { return modes_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<FockState, Amplitude>& terms() const { return terms_; }

  double norm_squared() const;
  // Rescales to unit norm and drops amplitudes below kPruneTolerance.
  StateVector normalized() const;

 private:
  int modes_ = -1;
  std::map<FockState, Amplitude> terms_;
};

// Conjugate-linear in the first argument.
Amplitude sv_inner(const StateVector& a, const StateVector& b);

}  // namespace photonsim
