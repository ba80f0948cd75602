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

#include <Eigen/Dense>

#include "photonsim/fock.hpp"

namespace photonsim {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kUnitaryTolerance = 1e-10;

template <typename Derived>
double unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  const auto n = u.rows();
  return (u.adjoint() * u - Derived::PlainObject::Identity(n, n)).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  return a.allFinite();
}

// Square matrix with U^dagger U = I to kUnitaryTolerance (max-norm).
class Unitary {
 public:
  explicit Unitary(ComplexMatrix matrix, double tolerance = kUnitaryTolerance);

  static Unitary identity(int m);
  // Skips the unitarity check; only for products of already-unitary factors.
  static Unitary trusted(ComplexMatrix matrix);

  int modes() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::complex<double> operator()(int row, int col) const { return matrix_(row, col); }

 private:
  struct TrustedTag {};
  Unitary(ComplexMatrix matrix, TrustedTag) : matrix_(std::move(matrix)) {}

  ComplexMatrix matrix_;
};

// Embeds a k x k block acting on modes [offset, offset + k) into the m x m identity.
ComplexMatrix embed(const ComplexMatrix& block, int offset, int m);

// Rows of u repeated s_i times, then columns repeated t_j times.
ComplexMatrix submatrix_ts(const ComplexMatrix& u, const FockState& t, const FockState& s);

}  // namespace photonsim
