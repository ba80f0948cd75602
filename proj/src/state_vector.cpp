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

#include "photonsim/state_vector.hpp"

#include <cmath>

#include "photonsim/error.hpp"

namespace photonsim {

StateVector::StateVector(const FockState& basis_state) { add(basis_state, 1.0); }

void StateVector::add(const FockState& state, Amplitude amplitude) {
  if (modes_ < 0) {
    modes_ = state.modes();
  } else if (state.modes() != modes_) {
    throw InvalidArgument("state " + state.to_string() + " has " + std::to_string(state.modes()) +
                          " modes, state vector has " + std::to_string(modes_));
  }
  terms_[state] += amplitude;
}

Amplitude StateVector::operator[](const FockState& state) const {
  auto it = terms_.find(state);
  return it == terms_.end() ? Amplitude{} : it->second;
}

double StateVector::norm_squared() const {
  double total = 0;
  for (const auto& [state, amp] : terms_) total += std::norm(amp);
  return total;
}

StateVector StateVector::normalized() const {
  const double norm = std::sqrt(norm_squared());
  if (!(norm > 0)) throw NumericError("cannot normalize a zero state vector");
  StateVector out;
  out.modes_ = modes_;
  for (const auto& [state, amp] : terms_) {
    const Amplitude scaled = amp / norm;
    if (std::abs(scaled) >= kPruneTolerance) out.terms_.emplace(state, scaled);
  }
  return out;
}

Amplitude sv_inner(const StateVector& a, const StateVector& b) {
  if (!a.empty() && !b.empty() && a.modes() != b.modes()) {
    throw InvalidArgument("inner product of state vectors with different mode counts");
  }
  Amplitude total{};
  const auto& small = a.size() <= b.size() ? a : b;
  for (const auto& [state, amp] : small.terms()) {
    if (&small == &a) {
      total += std::conj(amp) * b[state];
    } else {
      total += std::conj(a[state]) * amp;
    }
  }
  return total;
}

}  // namespace photonsim
