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

#include "photonsim/backends.hpp"

#include <cmath>

#include "photonsim/error.hpp"

namespace photonsim {

bool supports(Backend backend, Task task) {
  switch (backend) {
    case Backend::Naive:
      return task != Task::TimeCircuit;
    case Backend::Slos:
      return task == Task::FullDistribution || task == Task::Amplitude;
    case Backend::Stepper:
      return task != Task::Sampling;
    case Backend::CliffordClifford2017:
      return task == Task::Sampling;
  }
  return false;
}

namespace {

std::string_view task_name(Task task) {
  switch (task) {
    case Task::Sampling:
      return "sampling";
    case Task::SingleOutput:
      return "single-output probability";
    case Task::FullDistribution:
      return "full distribution";
    case Task::Amplitude:
      return "probability amplitude";
    case Task::TimeCircuit:
      return "time circuits";
  }
  return "?";
}

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void check_plain_input(const Unitary& u, const FockState& s, const char* what) {
  if (s.is_annotated()) {
    throw InvalidArgument(std::string(what) + " must be a plain Fock state, got " + s.to_string());
  }
  if (s.modes() != u.modes()) {
    throw InvalidArgument(std::string(what) + " " + s.to_string() + " does not have " +
                          std::to_string(u.modes()) + " modes");
  }
}

}  // namespace

void require_support(Backend backend, Task task) {
  if (!supports(backend, task)) {
    throw CapabilityError("back-end '" + std::string(backend_name(backend)) +
                          "' does not support " + std::string(task_name(task)));
  }
}

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::Naive:
      return "naive";
    case Backend::Slos:
      return "slos";
    case Backend::Stepper:
      return "stepper";
    case Backend::CliffordClifford2017:
      return "cc2017";
  }
  return "?";
}

Backend parse_backend(std::string_view name) {
  for (Backend b : {Backend::Naive, Backend::Slos, Backend::Stepper, Backend::CliffordClifford2017}) {
    if (name == backend_name(b)) return b;
  }
  throw InvalidArgument("unknown back-end '" + std::string(name) + "'");
}

Amplitude amplitude(const Unitary& u, const FockState& input, const FockState& output,
                    const PermanentConfig& config) {
  check_plain_input(u, input, "input");
  check_plain_input(u, output, "output");
  const ComplexMatrix sub = submatrix_ts(u.matrix(), input, output);
  double norm = 1;
  for (int i = 0; i < u.modes(); ++i) norm *= factorial(input[i]) * factorial(output[i]);
  return permanent(sub, config) / std::sqrt(norm);
}

double probability(const Unitary& u, const FockState& input, const FockState& output,
                   const PermanentConfig& config) {
  return std::norm(amplitude(u, input, output, config));
}

Distribution naive_distribution(const Unitary& u, const FockState& input,
                                const PermanentConfig& config) {
  check_plain_input(u, input, "input");
  Distribution d;
  for (const auto& s : FockBasis(u.modes(), input.photons()).states()) {
    d.add(s, probability(u, input, s, config));
  }
  return d;
}

Distribution simulate_annotated(const Unitary& u, const FockState& input,
                                const SlosOptions& options) {
  if (input.modes() != u.modes()) throw InvalidArgument("input mode count mismatch");
  if (!input.is_annotated()) return slos_full_distribution(u, input, options);
  std::map<FockState, double> acc{{FockState::vacuum(u.modes()), 1.0}};
  for (const auto& [tag, group] : group_by_tag(input)) {
    const ComplexVector amps = slos_amplitudes(u, group, options);
    const FockBasis basis(u.modes(), group.photons());
    std::vector<std::pair<FockState, double>> part;
    for (std::uint64_t i = 0; i < basis.size(); ++i) {
      const double p = std::norm(amps(static_cast<Eigen::Index>(i)));
      if (p > 0) part.emplace_back(basis[i], p);
    }
    std::map<FockState, double> next;
    std::vector<int> occ(u.modes());
    for (const auto& [s1, p1] : acc) {
      for (const auto& [s2, p2] : part) {
        for (int k = 0; k < u.modes(); ++k) occ[k] = s1[k] + s2[k];
        next[FockState(occ)] += p1 * p2;
      }
    }
    acc = std::move(next);
  }
  Distribution d;
  for (const auto& [s, p] : acc) d.add(s, p);
  return d;
}

}  // namespace photonsim
