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

#include "photonsim/gate_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "photonsim/error.hpp"

namespace photonsim {

double GateAnalysis::operator()(const std::string& in, const std::string& out) const {
  const auto i = std::find(input_labels.begin(), input_labels.end(), in);
  const auto o = std::find(output_labels.begin(), output_labels.end(), out);
  if (i == input_labels.end() || o == output_labels.end()) {
    throw InvalidArgument("unknown gate label");
  }
  return table(i - input_labels.begin(), o - output_labels.begin());
}

GateAnalysis analyze_gate(const Unitary& u, const std::vector<LabeledState>& inputs,
                          const std::vector<LabeledState>& outputs,
                          const std::map<std::string, std::string>& expected,
                          const PostSelectionRule& heralding, const SlosOptions& options) {
  if (inputs.empty() || outputs.empty()) throw InvalidArgument("gate analysis needs labeled states");
  const int n = inputs.front().state.photons();
  for (const auto& in : inputs) {
    if (in.state.modes() != u.modes() || in.state.photons() != n) {
      throw InvalidArgument("gate inputs must share the mode and photon count");
    }
  }
  GateAnalysis a;
  for (const auto& in : inputs) a.input_labels.push_back(in.label);
  for (const auto& out : outputs) a.output_labels.push_back(out.label);
  a.table = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(inputs.size()),
                                  static_cast<Eigen::Index>(outputs.size()));
  double fidelity_sum = 0;
  int expectations = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Distribution d = slos_full_distribution(u, inputs[i].state, options);
    double kept = 0;
    for (std::size_t o = 0; o < outputs.size(); ++o) {
      const FockState& s = outputs[o].state;
      const double p = heralding(s) ? d[s] : 0.0;
      a.table(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(o)) = p;
      kept += p;
    }
    if (!(kept > kMinRetainedMass)) {
      throw PostSelectionError("post-selection annihilates input '" + inputs[i].label + "'");
    }
    a.table.row(static_cast<Eigen::Index>(i)) /= kept;
    a.success.push_back(kept);
    if (auto e = expected.find(inputs[i].label); e != expected.end()) {
      fidelity_sum += a(inputs[i].label, e->second);
      ++expectations;
    }
  }
  a.performance = *std::min_element(a.success.begin(), a.success.end());
  if (expectations > 0) a.error_rate = std::max(0.0, 1.0 - fidelity_sum / expectations);
  return a;
}

GateAnalysis analyze_gate(const Circuit& circuit, const std::vector<LabeledState>& inputs,
                          const std::vector<LabeledState>& outputs,
                          const std::map<std::string, std::string>& expected,
                          const PostSelectionRule& heralding, const SlosOptions& options) {
  return analyze_gate(compute_unitary(circuit), inputs, outputs, expected, heralding, options);
}

namespace {

std::string format_number(double v) {
  if (std::abs(v) < 5e-7) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string format_fraction(double v) {
  for (int q = 1; q <= 1000; ++q) {
    const double p = std::round(v * q);
    if (std::abs(v - p / q) < 1e-9) {
      if (q == 1) return std::to_string(static_cast<long long>(p));
      return std::to_string(static_cast<long long>(p)) + "/" + std::to_string(q);
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string format_gate_table(const GateAnalysis& a) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({""});
  for (const auto& l : a.output_labels) cells.back().push_back(l);
  for (Eigen::Index i = 0; i < a.table.rows(); ++i) {
    cells.push_back({a.input_labels[i]});
    for (Eigen::Index o = 0; o < a.table.cols(); ++o) cells.back().push_back(format_number(a.table(i, o)));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string rule;
  for (std::size_t c = 0; c < width.size(); ++c) {
    if (c) rule += "  ";
    rule += std::string(width[c], '-');
  }
  std::string out = rule + "\n";
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      if (c) line += "  ";
      const std::string& cell = cells[r][c];
      const std::string pad(width[c] - cell.size(), ' ');
      // Output labels in the header row are right-aligned.
      line += (c == 0 || r > 0) ? cell + pad : pad + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
    if (r == 0) out += rule + "\n";
  }
  out += rule + "\n";
  return out;
}

std::string format_gate_csv(const GateAnalysis& a) {
  std::string out = "input";
  for (const auto& l : a.output_labels) out += "," + l;
  out += ",success\n";
  char buf[32];
  for (Eigen::Index i = 0; i < a.table.rows(); ++i) {
    out += a.input_labels[i];
    for (Eigen::Index o = 0; o < a.table.cols(); ++o) {
      std::snprintf(buf, sizeof buf, ",%.17g", a.table(i, o));
      out += buf;
    }
    std::snprintf(buf, sizeof buf, ",%.17g\n", a.success[i]);
    out += buf;
  }
  return out;
}

std::string format_gate_summary(const GateAnalysis& a) {
  std::string out = "performance=" + format_fraction(a.performance);
  if (a.error_rate) {
    char buf[64];
    std::snprintf(buf, sizeof buf, ", error rate=%.3f%%", 100.0 * *a.error_rate);
    out += buf;
  }
  return out;
}

}  // namespace photonsim
