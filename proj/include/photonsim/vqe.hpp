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
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "photonsim/circuit.hpp"
#include "photonsim/logical.hpp"
#include "photonsim/optimize.hpp"

namespace photonsim {

// A circuit family with `parameters` free real parameters.
struct CircuitTemplate {
  int parameters = 0;
  std::function<Circuit(const Eigen::VectorXd&)> bind;
};

struct VqeOptions {
  int restarts = 5;
  std::uint64_t seed = 20220401;
  NelderMeadOptions optimizer;
};

struct VqeResult {
  double energy = 0;
  Eigen::VectorXd parameters;
  int best_restart = 0;
  int evaluations = 0;
  std::vector<double> energies;  // every evaluated energy, in order
};

// Energy of the post-selected logical output state for one parameter vector.
double vqe_energy(const CircuitTemplate& ansatz, const Eigen::VectorXd& parameters,
                  const LogicalEncoding& encoding, const QubitOperator& h, const FockState& input,
                  const PostSelectionRule& rule = {});

// Nelder-Mead from `restarts` starting points drawn uniformly from [0, 2 pi);
// the lowest energy wins, ties going to the earliest restart.
VqeResult vqe_run(const CircuitTemplate& ansatz, const LogicalEncoding& encoding,
                  const QubitOperator& h, const FockState& input,
                  const PostSelectionRule& rule = {}, const VqeOptions& options = {});

}  // namespace photonsim
