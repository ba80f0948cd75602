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

#include <cmath>
#include <map>

#include "photonsim/backends.hpp"
#include "photonsim/error.hpp"

namespace photonsim {

namespace {

// Amplitudes below this are cancellation residue and are dropped between steps.
constexpr double kStepperFloor = 1e-15;

// Fock-space lift of a k-mode block, one matrix per local photon count,
// indexed (output rank, input rank) in FockBasis(k, n).
class BlockCache {
 public:
  const ComplexMatrix& get(const ComplexMatrix& u, int n) {
    Key key{std::vector<double>(), n};
    key.entries.reserve(2 * u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      key.entries.push_back(u.data()[i].real());
      key.entries.push_back(u.data()[i].imag());
    }
    key.entries.push_back(static_cast<double>(u.rows()));
    auto it = blocks_.find(key);
    if (it != blocks_.end()) return it->second;
    const int k = static_cast<int>(u.rows());
    const auto states = FockBasis(k, n).states();
    const Unitary local = Unitary::trusted(u);
    ComplexMatrix block(states.size(), states.size());
    for (std::size_t c = 0; c < states.size(); ++c) {
      for (std::size_t r = 0; r < states.size(); ++r) {
        block(r, c) = amplitude(local, states[c], states[r]);
      }
    }
    return blocks_.emplace(std::move(key), std::move(block)).first->second;
  }

 private:
  struct Key {
    std::vector<double> entries;
    int n;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, ComplexMatrix> blocks_;
};

}  // namespace

StateVector stepper_apply(std::span<const ModeOperation> ops, const StateVector& psi) {
  if (psi.empty()) return psi;
  for (const auto& [state, amp] : psi.terms()) {
    if (state.is_annotated()) throw InvalidArgument("stepper_apply needs plain Fock states");
  }
  BlockCache cache;
  std::map<FockState, Amplitude> current(psi.terms().begin(), psi.terms().end());
  std::vector<int> occ;
  for (const auto& op : ops) {
    const int k = static_cast<int>(op.matrix.rows());
    if (op.offset < 0 || op.offset + k > psi.modes()) {
      throw InvalidArgument("operation does not fit the state's modes");
    }
    std::map<FockState, Amplitude> next;
    std::map<int, std::vector<FockState>> local_bases;
    for (const auto& [state, amp] : current) {
      int n_local = 0;
      std::vector<int> local(k);
      for (int i = 0; i < k; ++i) n_local += local[i] = state[op.offset + i];
      if (n_local == 0) {
        next[state] += amp;
        continue;
      }
      const ComplexMatrix& block = cache.get(op.matrix, n_local);
      auto [it, inserted] = local_bases.try_emplace(n_local);
      if (inserted) it->second = FockBasis(k, n_local).states();
      const auto& basis = it->second;
      const auto in = static_cast<Eigen::Index>(rank(FockState(local)));
      occ.assign(state.occupations().begin(), state.occupations().end());
      for (std::size_t r = 0; r < basis.size(); ++r) {
        const Amplitude b = block(static_cast<Eigen::Index>(r), in);
        if (b == Amplitude{}) continue;
        for (int i = 0; i < k; ++i) occ[op.offset + i] = basis[r][i];
        next[FockState(occ)] += b * amp;
      }
    }
    std::erase_if(next, [](const auto& kv) { return std::abs(kv.second) < kStepperFloor; });
    current = std::move(next);
  }
  StateVector out;
  for (const auto& [state, amp] : current) out.add(state, amp);
  return out;
}

StateVector stepper_evolve(const Circuit& circuit, const StateVector& psi) {
  if (psi.empty()) return psi;
  if (psi.modes() != circuit.modes()) {
    throw InvalidArgument("state has " + std::to_string(psi.modes()) + " modes, circuit has " +
                          std::to_string(circuit.modes()));
  }
  bool tagged = false;
  for (const auto& [state, amp] : psi.terms()) tagged |= state.is_annotated();
  if (!tagged) return stepper_apply(lower(circuit, ModeSpace::Spatial), psi);
  StateVector expanded;
  for (const auto& [state, amp] : psi.terms()) expanded.add(expand_polarization(state), amp);
  return stepper_apply(lower(circuit, ModeSpace::Polarised), expanded);
}

Distribution stepper_distribution(const Circuit& circuit, const FockState& input) {
  const StateVector out = stepper_evolve(circuit, StateVector(input));
  Distribution d;
  for (const auto& [state, amp] : out.terms()) d.add(state, std::norm(amp));
  return d;
}

}  // namespace photonsim
