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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "photonsim/postselect.hpp"
#include "photonsim/state_vector.hpp"

namespace photonsim {

// Table from computational basis index (first qubit most significant) to the
// Fock state encoding it.
class LogicalEncoding {
 public:
  // Qubit q is |1,0> for 0 and |0,1> for 1 on modes (first, second) of
  // qubit_modes[q]; all other modes are empty. Mode pairs must be disjoint.
  static LogicalEncoding dual_rail(int modes, const std::vector<std::pair<int, int>>& qubit_modes);
  // Explicit table, e.g. spatial plus polarisation encodings.
  static LogicalEncoding from_basis(int qubits, std::vector<FockState> basis);

  int qubits() const { return qubits_; }
  int modes() const { return basis_.front().modes(); }
  const std::vector<FockState>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const FockState& state) const;
  // Bit string such as "01".
  std::string label(std::size_t index) const;

 private:
  LogicalEncoding(int qubits, std::vector<FockState> basis);

  int qubits_;
  std::vector<FockState> basis_;
};

// Post-selects, keeps the encoded terms and renormalizes; the global phase is
// fixed by making the first nonzero amplitude real and positive.
Eigen::VectorXcd logical_statevector(const StateVector& psi, const LogicalEncoding& encoding,
                                     const PostSelectionRule& rule = {});

// Dense Hermitian operator on q qubits.
class QubitOperator {
 public:
  explicit QubitOperator(Eigen::MatrixXcd matrix);

  // Weighted Pauli strings over {I, X, Y, Z}; character k acts on qubit k,
  // the most significant one first.
  static QubitOperator from_paulis(int qubits,
                                   const std::vector<std::pair<std::string, double>>& terms);

  int qubits() const { return qubits_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXcd matrix_;
  int qubits_ = 0;
};

// <psi|H|psi> / <psi|psi>.
double expectation(const Eigen::VectorXcd& psi, const QubitOperator& h);

}  // namespace photonsim
