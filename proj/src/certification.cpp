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

#include "photonsim/certification.hpp"

#include <cmath>

#include "photonsim/error.hpp"

namespace photonsim {

double pk_analytic(int m, int n, int K) {
  if (m < 1 || n < 0 || K < 1 || K > m) throw InvalidArgument("pk_analytic needs 1 <= K <= m");
  long double p = 1;
  for (int j = 0; j < n; ++j) p *= static_cast<long double>(K + j) / (m + j);
  return static_cast<double>(p);
}

namespace {

void check_record(const SampleRecord& samples) {
  if (samples.outcomes.empty()) throw InvalidArgument("empty sample record");
  const int m = samples.outcomes.front().modes();
  const int n = samples.outcomes.front().photons();
  for (const auto& s : samples.outcomes) {
    if (s.modes() != m || s.photons() != n) {
      throw InvalidArgument("samples do not share mode and photon counts");
    }
  }
}

}  // namespace

double pk_estimate(const SampleRecord& samples, int K) {
  if (samples.outcomes.empty()) throw InvalidArgument("empty sample record");
  const int m = samples.outcomes.front().modes();
  if (K < 1 || K > m) throw InvalidArgument("K must lie in [1, m]");
  std::size_t hits = 0;
  for (const auto& s : samples.outcomes) {
    bool inside = true;
    for (int i = K; i < s.modes() && inside; ++i) inside = s[i] == 0;
    hits += inside;
  }
  return static_cast<double>(hits) / static_cast<double>(samples.count());
}

std::vector<PkReport> certify(const SampleRecord& samples, const std::vector<int>& ks) {
  check_record(samples);
  const int m = samples.outcomes.front().modes();
  const int n = samples.outcomes.front().photons();
  std::vector<PkReport> out;
  for (int k : ks) {
    const double p = pk_estimate(samples, k);
    out.push_back({k, p, pk_analytic(m, n, k),
                   std::sqrt(p * (1 - p) / static_cast<double>(samples.count()))});
  }
  return out;
}

}  // namespace photonsim
