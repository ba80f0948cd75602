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

#include <vector>

#include "photonsim/distribution.hpp"

namespace photonsim {

// Haar average of the probability that all n photons leave through the first
// K of m modes: prod_{j<n} (K + j) / (m + j).
double pk_analytic(int m, int n, int K);

// Fraction of samples with no photon in modes K..m-1.
double pk_estimate(const SampleRecord& samples, int K);

struct PkReport {
  int K;
  double estimate;
  double analytic;
  double std_error;  // binomial standard error of the estimate
};

// Samples must share mode and photon counts.
std::vector<PkReport> certify(const SampleRecord& samples, const std::vector<int>& ks);

}  // namespace photonsim
