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

#include "photonsim/backends.hpp"
#include "photonsim/error.hpp"

namespace photonsim {

namespace {

// dims[a][b] = fock_dim(a, b) for 1 <= a <= m, 0 <= b <= n.
std::vector<std::vector<std::uint64_t>> dim_table(int m, int n) {
  std::vector<std::vector<std::uint64_t>> dims(m + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (int a = 1; a <= m; ++a) {
    for (int b = 0; b <= n; ++b) dims[a][b] = fock_dim(a, b);
  }
  return dims;
}

}  // namespace

ComplexVector slos_amplitudes(const Unitary& u, const FockState& input, const SlosOptions& options) {
  if (input.is_annotated()) throw InvalidArgument("SLOS needs a plain input state");
  const int m = u.modes();
  if (input.modes() != m) throw InvalidArgument("input mode count does not match the unitary");
  const int n = input.photons();

  const std::uint64_t final_dim = fock_dim(m, n);
  const std::uint64_t prev_dim = n > 0 ? fock_dim(m, n - 1) : 0;
  const long double bytes = (static_cast<long double>(final_dim) + prev_dim) * sizeof(Amplitude);
  if (bytes > static_cast<long double>(options.memory_budget)) {
    throw CapacityError("SLOS needs ~" + std::to_string(static_cast<double>(bytes) / (1 << 20)) +
                        " MiB for " + std::to_string(n) + " photons over " + std::to_string(m) +
                        " modes, above the memory budget");
  }
  const auto dims = dim_table(m, n);

  std::vector<int> photon_modes;
  double norm = 1;
  for (int j = 0; j < m; ++j) {
    photon_modes.insert(photon_modes.end(), input[j], j);
    for (int k = 2; k <= input[j]; ++k) norm *= k;
  }

  // Layer k holds the amplitudes of the first k creation operators applied to
  // the vacuum. The rank of s + e_i splits into a prefix part, where the
  // remaining photon count grew by one, and an unchanged suffix part.
  ComplexVector layer = ComplexVector::Ones(1);
  std::vector<int> occ(m), remaining(m + 1);
  std::vector<std::uint64_t> prefix(m), suffix(m + 1);
  for (int k = 1; k <= n; ++k) {
    const auto column = u.matrix().col(photon_modes[k - 1]);
    ComplexVector next = ComplexVector::Zero(static_cast<Eigen::Index>(dims[m][k]));
    std::fill(occ.begin(), occ.end(), 0);
    occ[0] = k - 1;
    std::uint64_t p = 0;
    do {
      const Amplitude a = layer(static_cast<Eigen::Index>(p));
      if (a != Amplitude{}) {
        remaining[m] = 0;
        for (int j = m - 1; j >= 0; --j) remaining[j] = remaining[j + 1] + occ[j];
        suffix[m - 1] = 0;
        suffix[m] = 0;
        for (int j = m - 2; j >= 0; --j) {
          suffix[j] = suffix[j + 1] + (remaining[j + 1] > 0 ? dims[m - j][remaining[j + 1] - 1] : 0);
        }
        std::uint64_t pre = 0;
        for (int i = 0; i < m; ++i) {
          prefix[i] = pre;
          if (i + 1 < m) pre += dims[m - i][remaining[i + 1]];
        }
        for (int i = 0; i < m; ++i) {
          const std::uint64_t idx = prefix[i] + suffix[i];
          next(static_cast<Eigen::Index>(idx)) += a * column(i) * std::sqrt(occ[i] + 1.0);
        }
      }
      ++p;
    } while (next_state(occ));
    layer = std::move(next);
  }
  if (norm != 1) layer /= std::sqrt(norm);
  return layer;
}

StateVector slos_evolve(const Unitary& u, const FockState& input, const SlosOptions& options) {
  const ComplexVector amps = slos_amplitudes(u, input, options);
  const FockBasis basis(u.modes(), input.photons());
  StateVector out;
  std::vector<int> occ(u.modes(), 0);
  occ[0] = input.photons();
  std::uint64_t i = 0;
  do {
    const Amplitude a = amps(static_cast<Eigen::Index>(i++));
    if (a != Amplitude{}) out.add(FockState(occ), a);
  } while (next_state(occ));
  if (out.empty()) out.add(basis[0], 0.0);
  return out;
}

Distribution slos_full_distribution(const Unitary& u, const FockState& input,
                                    const SlosOptions& options) {
  const ComplexVector amps = slos_amplitudes(u, input, options);
  Distribution d;
  std::vector<int> occ(u.modes(), 0);
  occ[0] = input.photons();
  std::uint64_t i = 0;
  do {
    d.add(FockState(occ), std::norm(amps(static_cast<Eigen::Index>(i++))));
  } while (next_state(occ));
  return d;
}

}  // namespace photonsim
