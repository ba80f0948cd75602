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

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "photonsim/matrix.hpp"

namespace photonsim::testing {

using Complex = std::complex<double>;

// Permanent by cofactor expansion along the first row; shares no code with
// the library kernels.
inline Complex laplace_permanent(const Eigen::MatrixXcd& a) {
  const auto n = a.rows();
  if (n == 0) return 1.0;
  if (n == 1) return a(0, 0);
  Complex total = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::MatrixXcd minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index k = 0, j = 0; k < n; ++k) {
        if (k != c) minor(r - 1, j++) = a(r, k);
      }
    }
    total += a(0, c) * laplace_permanent(minor);
  }
  return total;
}

inline double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline Eigen::MatrixXcd random_complex_matrix(int n, unsigned seed) {
  std::srand(seed);
  return Eigen::MatrixXcd::Random(n, n);
}

// The six-mode heralded CNOT unitary as printed for the reference circuit.
inline Eigen::MatrixXcd cnot_reference_unitary() {
  const double a = std::sqrt(3.0) / 3;
  const double b = std::sqrt(6.0) / 3;
  const Complex i(0, 1);
  Eigen::MatrixXcd u(6, 6);
  u << a, -b * i, 0, 0, 0, 0,
       -b * i, a, 0, 0, 0, 0,
       0, 0, a, -a * i, -a * i, 0,
       0, 0, -a * i, a, 0, a,
       0, 0, -a * i, 0, a, -a,
       0, 0, 0, a, -a, -a;
  return u;
}

}  // namespace photonsim::testing
