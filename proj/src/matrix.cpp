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

#include "photonsim/matrix.hpp"

#include <sstream>

#include "photonsim/error.hpp"

namespace photonsim {

Unitary::Unitary(ComplexMatrix matrix, double tolerance) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw NumericError("unitary must be square, got " + std::to_string(matrix_.rows()) + "x" +
                       std::to_string(matrix_.cols()));
  }
  if (!all_finite(matrix_)) throw NumericError("matrix has non-finite entries");
  const double defect = unitarity_defect(matrix_);
  if (!(defect < tolerance)) {
    std::ostringstream msg;
    msg << "matrix is not unitary: max |U^dagger U - I| = " << defect;
    throw NumericError(msg.str());
  }
}

Unitary Unitary::identity(int m) { return Unitary(ComplexMatrix::Identity(m, m), TrustedTag{}); }

Unitary Unitary::trusted(ComplexMatrix matrix) { return Unitary(std::move(matrix), TrustedTag{}); }

ComplexMatrix embed(const ComplexMatrix& block, int offset, int m) {
  const auto k = block.rows();
  if (offset < 0 || offset + k > m) throw InvalidArgument("block does not fit at offset");
  ComplexMatrix out = ComplexMatrix::Identity(m, m);
  out.block(offset, offset, k, k) = block;
  return out;
}

ComplexMatrix submatrix_ts(const ComplexMatrix& u, const FockState& t, const FockState& s) {
  const int m = static_cast<int>(u.rows());
  if (t.modes() != m || s.modes() != m) {
    throw InvalidArgument("state mode count does not match the " + std::to_string(m) +
                          "-mode unitary");
  }
  const int n = t.photons();
  if (s.photons() != n) {
    throw InvalidArgument("photon number mismatch between " + t.to_string() + " and " +
                          s.to_string());
  }
  std::vector<int> rows, cols;
  rows.reserve(n);
  cols.reserve(n);
  for (int i = 0; i < m; ++i) {
    rows.insert(rows.end(), s[i], i);
    cols.insert(cols.end(), t[i], i);
  }
  ComplexMatrix out(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out(r, c) = u(rows[r], cols[c]);
  }
  return out;
}

}  // namespace photonsim
