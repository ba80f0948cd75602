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

#include "photonsim/vqe.hpp"

#include <numbers>

#include "photonsim/backends.hpp"
#include "photonsim/error.hpp"
#include "photonsim/random.hpp"

namespace photonsim {

double vqe_energy(const CircuitTemplate& ansatz, const Eigen::VectorXd& parameters,
                  const LogicalEncoding& encoding, const QubitOperator& h, const FockState& input,
                  const PostSelectionRule& rule) {
  if (encoding.qubits() != h.qubits()) {
    throw InvalidArgument("encoding and Hamiltonian act on different qubit counts");
  }
  const Unitary u = compute_unitary(ansatz.bind(parameters));
  return expectation(logical_statevector(slos_evolve(u, input), encoding, rule), h);
}

VqeResult vqe_run(const CircuitTemplate& ansatz, const LogicalEncoding& encoding,
                  const QubitOperator& h, const FockState& input, const PostSelectionRule& rule,
                  const VqeOptions& options) {
  if (ansatz.parameters < 1 || !ansatz.bind) throw InvalidArgument("empty circuit template");
  if (options.restarts < 1) throw InvalidArgument("vqe_run needs at least one restart");
  VqeResult best;
  std::vector<double> energies;
  int evaluations = 0;
  auto objective = [&](const Eigen::VectorXd& x) {
    const double e = vqe_energy(ansatz, x, encoding, h, input, rule);
    energies.push_back(e);
    return e;
  };
  for (int r = 0; r < options.restarts; ++r) {
    Rng rng = split_stream(options.seed, static_cast<std::uint64_t>(r));
    Eigen::VectorXd x0(ansatz.parameters);
    for (Eigen::Index i = 0; i < x0.size(); ++i) x0(i) = 2 * std::numbers::pi * uniform01(rng);
    const NelderMeadResult run = nelder_mead(objective, x0, options.optimizer);
    evaluations += run.evaluations;
    if (r == 0 || run.value < best.energy) {
      best.energy = run.value;
      best.parameters = run.x;
      best.best_restart = r;
    }
  }
  best.evaluations = evaluations;
  best.energies = std::move(energies);
  return best;
}

}  // namespace photonsim
