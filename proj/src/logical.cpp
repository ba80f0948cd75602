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

#include "photonsim/logical.hpp"

#include <bit>
#include <cmath>
#include <set>

#include "photonsim/error.hpp"

namespace photonsim {

LogicalEncoding::LogicalEncoding(int qubits, std::vector<FockState> basis)
    : qubits_(qubits), basis_(std::move(basis)) {}

LogicalEncoding LogicalEncoding::dual_rail(int modes,
                                           const std::vector<std::pair<int, int>>& qubit_modes) {
  const int q = static_cast<int>(qubit_modes.size());
  if (q < 1 || q > 20) throw InvalidArgument("dual-rail encoding needs 1 to 20 qubits");
  std::set<int> used;
  for (const auto& [a, b] : qubit_modes) {
    for (int mode : {a, b}) {
      if (mode < 0 || mode >= modes) throw InvalidArgument("qubit mode out of range");
      if (!used.insert(mode).second) throw InvalidArgument("qubit mode pairs must be disjoint");
    }
  }
  std::vector<FockState> basis;
  for (std::size_t index = 0; index < (std::size_t{1} << q); ++index) {
    std::vector<int> occ(modes, 0);
    for (int k = 0; k < q; ++k) {
      const bool one = index >> (q - 1 - k) & 1;
      ++occ[one ? qubit_modes[k].second : qubit_modes[k].first];
    }
    basis.emplace_back(std::move(occ));
  }
  return LogicalEncoding(q, std::move(basis));
}

LogicalEncoding LogicalEncoding::from_basis(int qubits, std::vector<FockState> basis) {
  if (qubits < 1 || basis.size() != (std::size_t{1} << qubits)) {
    throw InvalidArgument("an encoding of q qubits needs 2^q basis states");
  }
  std::set<FockState> distinct(basis.begin(), basis.end());
  if (distinct.size() != basis.size()) throw InvalidArgument("encoding basis states must be distinct");
  for (const auto& s : basis) {
    if (s.modes() != basis.front().modes() || s.is_annotated()) {
      throw InvalidArgument("encoding basis states must be plain and share a mode count");
    }
  }
  return LogicalEncoding(qubits, std::move(basis));
}

std::optional<std::size_t> LogicalEncoding::index_of(const FockState& state) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] == state) return i;
  }
  return std::nullopt;
}

std::string LogicalEncoding::label(std::size_t index) const {
  std::string out(qubits_, '0');
  for (int k = 0; k < qubits_; ++k) {
    if (index >> (qubits_ - 1 - k) & 1) out[k] = '1';
  }
  return out;
}

Eigen::VectorXcd logical_statevector(const StateVector& psi, const LogicalEncoding& encoding,
                                     const PostSelectionRule& rule) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(encoding.basis().size()));
  for (const auto& [state, amp] : psi.terms()) {
    if (!rule(state)) continue;
    if (auto i = encoding.index_of(state)) v(static_cast<Eigen::Index>(*i)) += amp;
  }
  const double norm = v.norm();
  if (!(norm * norm > kMinRetainedMass)) throw PostSelectionError("post-selection annihilates the logical state");
  v /= norm;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > kPruneTolerance) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      break;
    }
  }
  return v;
}

QubitOperator::QubitOperator(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  const auto dim = static_cast<std::size_t>(matrix_.rows());
  if (matrix_.rows() != matrix_.cols() || dim < 2 || !std::has_single_bit(dim)) {
    throw InvalidArgument("qubit operator must be 2^q x 2^q");
  }
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw NumericError("qubit operator is not Hermitian");
  }
  qubits_ = std::countr_zero(dim);
}

QubitOperator QubitOperator::from_paulis(int qubits,
                                         const std::vector<std::pair<std::string, double>>& terms) {
  if (qubits < 1 || qubits > 12) throw InvalidArgument("unsupported qubit count");
  using Matrix = Eigen::MatrixXcd;
  const std::complex<double> i(0, 1);
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -i, i, 0;
  z << 1, 0, 0, -1;
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& [pauli, weight] : terms) {
    if (static_cast<int>(pauli.size()) != qubits) {
      throw InvalidArgument("Pauli string '" + pauli + "' has the wrong length");
    }
    Matrix term = Matrix::Identity(1, 1);
    for (char c : pauli) {
      Matrix factor;
      switch (c) {
        case 'I':
          factor = Matrix::Identity(2, 2);
          break;
        case 'X':
          factor = x;
          break;
        case 'Y':
          factor = y;
          break;
        case 'Z':
          factor = z;
          break;
        default:
          throw InvalidArgument("bad Pauli letter in '" + pauli + "'");
      }
      Matrix next(term.rows() * 2, term.cols() * 2);
      for (Eigen::Index r = 0; r < term.rows(); ++r) {
        for (Eigen::Index c2 = 0; c2 < term.cols(); ++c2) {
          next.block(2 * r, 2 * c2, 2, 2) = term(r, c2) * factor;
        }
      }
      term = std::move(next);
    }
    h += weight * term;
  }
  return QubitOperator(std::move(h));
}

double expectation(const Eigen::VectorXcd& psi, const QubitOperator& h) {
  if (psi.size() != h.matrix().rows()) throw InvalidArgument("state and operator dimensions differ");
  const double norm2 = psi.squaredNorm();
  if (!(norm2 > 0)) throw NumericError("expectation of a zero vector");
  return psi.dot(h.matrix() * psi).real() / norm2;
}

}  // namespace photonsim
