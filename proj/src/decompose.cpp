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
#include <numbers>

#include "photonsim/circuit.hpp"

namespace photonsim {

namespace {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;

// Mesh cell acting on modes (k, k+1): a phase shifter phi on mode k followed by
// a zero-phase beam splitter theta, i.e. B(theta) diag(e^{i phi}, 1).
struct Cell {
  int k;
  double theta;
  double phi;
};

Matrix2 cell_matrix(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex e = std::polar(1.0, phi);
  Matrix2 m;
  m << c * e, Complex(0, s), Complex(0, s) * e, c;
  return m;
}

bool both_nonzero(Complex a, Complex b) { return std::abs(a) > 0 && std::abs(b) > 0; }

// Cell whose inverse, applied on columns (k, k+1) from the right, zeroes v(r, k).
Cell null_from_right(ComplexMatrix& v, int r, int k) {
  const Complex a = v(r, k);
  const Complex b = v(r, k + 1);
  const double theta = std::atan2(std::abs(a), std::abs(b));
  const double phi = both_nonzero(a, b) ? std::arg(a) - std::arg(b) - std::numbers::pi / 2 : 0.0;
  v.middleCols(k, 2) = (v.middleCols(k, 2) * cell_matrix(theta, phi).adjoint()).eval();
  return {k, theta, phi};
}

// Cell that, applied on rows (k, k+1) from the left, zeroes v(k + 1, c).
Cell null_from_left(ComplexMatrix& v, int k, int c) {
  const Complex a = v(k, c);
  const Complex b = v(k + 1, c);
  const double theta = std::atan2(std::abs(b), std::abs(a));
  const double phi = both_nonzero(a, b) ? std::arg(b) - std::arg(a) + std::numbers::pi / 2 : 0.0;
  v.middleRows(k, 2) = (cell_matrix(theta, phi) * v.middleRows(k, 2)).eval();
  return {k, theta, phi};
}

Complex unit(Complex z) {
  const double r = std::abs(z);
  return r > 0 ? z / r : Complex(1.0);
}

// Writes y = diag(d1, d2) B(theta) diag(e^{i phi}, 1).
void factor_cell(const Matrix2& y, Complex& d1, Complex& d2, double& theta, double& phi) {
  theta = std::atan2(std::abs(y(0, 1)) + std::abs(y(1, 0)), std::abs(y(0, 0)) + std::abs(y(1, 1)));
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex i(0, 1);
  if (c >= s) {
    const Complex d1_phase = unit(y(0, 0));
    d2 = unit(y(1, 1));
    d1 = s > 0 ? unit(y(0, 1) / i) : d1_phase;
    phi = std::arg(d1_phase / d1);
  } else {
    d1 = unit(y(0, 1) / i);
    const Complex d2_phase = unit(y(1, 0) / i);
    d2 = c > 0 ? unit(y(1, 1)) : d2_phase;
    phi = std::arg(d2_phase / d2);
  }
}

Circuit build(int m, const std::vector<Cell>& cells, const ComplexVector& phases, std::string name) {
  Circuit circuit(m, std::move(name));
  for (const auto& cell : cells) {
    circuit.add(cell.k, PhaseShifter{cell.phi});
    circuit.add(cell.k, BeamSplitter::from_theta(cell.theta));
  }
  for (int i = 0; i < m; ++i) circuit.add(i, PhaseShifter{std::arg(phases(i))});
  return circuit;
}

}  // namespace

Circuit decompose_triangular(const Unitary& u) {
  const int m = u.modes();
  ComplexMatrix v = u.matrix();
  std::vector<Cell> cells;
  for (int r = m - 1; r >= 1; --r) {
    for (int k = 0; k < r; ++k) cells.push_back(null_from_right(v, r, k));
  }
  return build(m, cells, v.diagonal(), "triangular");
}

Circuit decompose_rectangular(const Unitary& u) {
  const int m = u.modes();
  ComplexMatrix v = u.matrix();
  std::vector<Cell> right;
  std::vector<Cell> left;
  for (int i = 0; i + 1 < m; ++i) {
    if (i % 2 == 0) {
      for (int j = 0; j <= i; ++j) right.push_back(null_from_right(v, m - 1 - j, i - j));
    } else {
      for (int j = 1; j <= i + 1; ++j) left.push_back(null_from_left(v, m + j - i - 3, j - 1));
    }
  }
  // v is now diagonal: U = L_1^dag ... L_n^dag D R_k ... R_1. Move each L^dag
  // through D by refactoring L^dag diag(d) = diag(d') M'.
  ComplexVector d = v.diagonal();
  std::vector<Cell> cells = right;
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    const int k = it->k;
    Matrix2 y = cell_matrix(it->theta, it->phi).adjoint();
    y.col(0) *= d(k);
    y.col(1) *= d(k + 1);
    Cell moved{k, 0, 0};
    factor_cell(y, d(k), d(k + 1), moved.theta, moved.phi);
    cells.push_back(moved);
  }
  return build(m, cells, d, "rectangular");
}

}  // namespace photonsim
