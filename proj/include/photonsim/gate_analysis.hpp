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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "photonsim/backends.hpp"
#include "photonsim/circuit.hpp"
#include "photonsim/postselect.hpp"

namespace photonsim {

struct LabeledState {
  std::string label;
  FockState state;
};

struct GateAnalysis {
  std::vector<std::string> input_labels;
  std::vector<std::string> output_labels;
  // Row i: distribution over the labeled outputs for input i, conditioned on
  // landing in one of them (and on the heralding rule).
  Eigen::MatrixXd table;
  std::vector<double> success;  // per input
  double performance = 0;       // min of success
  std::optional<double> error_rate;

  double operator()(const std::string& in, const std::string& out) const;
};

// Inputs and outputs usually share one label set. error_rate is
// 1 - mean conditional probability of the expected label, over inputs that
// have an expectation.
GateAnalysis analyze_gate(const Unitary& u, const std::vector<LabeledState>& inputs,
                          const std::vector<LabeledState>& outputs,
                          const std::map<std::string, std::string>& expected = {},
                          const PostSelectionRule& heralding = {}, const SlosOptions& options = {});
GateAnalysis analyze_gate(const Circuit& circuit, const std::vector<LabeledState>& inputs,
                          const std::vector<LabeledState>& outputs,
                          const std::map<std::string, std::string>& expected = {},
                          const PostSelectionRule& heralding = {}, const SlosOptions& options = {});

// Short fraction p/q (q <= 1000) when v is one to 1e-9, decimal otherwise.
std::string format_fraction(double v);

std::string format_gate_table(const GateAnalysis& analysis);
std::string format_gate_csv(const GateAnalysis& analysis);
// "performance=1/9, error rate=0.000%".
std::string format_gate_summary(const GateAnalysis& analysis);

}  // namespace photonsim
