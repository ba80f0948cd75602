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

#include <algorithm>
#include <exception>
#include <thread>

#include "photonsim/backends.hpp"
#include "photonsim/error.hpp"
#include "photonsim/random.hpp"

namespace photonsim {

namespace {

constexpr std::size_t kSamplesPerStream = 256;
constexpr double kWeightFloor = 1e-300;

std::size_t draw(const std::vector<double>& weights, double total, Rng& rng) {
  const double u = uniform01(rng) * total;
  double acc = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (weights[i] > 0) return i;
  }
  return weights.size() - 1;
}

// One draw: shuffle the photons, then place photon k conditioned on photons
// 0..k-1, with weights |sum_l A(i, l) Perm(A[rows, cols \ l])|^2.
FockState sample_one(const ComplexMatrix& u, const std::vector<int>& photon_modes, Rng& rng) {
  const int m = static_cast<int>(u.rows());
  const int n = static_cast<int>(photon_modes.size());
  std::vector<int> cols = photon_modes;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(std::uniform_int_distribution<int>(0, i)(rng));
    std::swap(cols[i], cols[j]);
  }
  ComplexMatrix a(m, n);
  for (int l = 0; l < n; ++l) a.col(l) = u.col(cols[l]);

  std::vector<int> rows;
  std::vector<double> weights(m);
  ComplexMatrix x;
  for (int k = 1; k <= n; ++k) {
    if (k == 1) {
      for (int i = 0; i < m; ++i) weights[i] = std::norm(a(i, 0));
    } else {
      x.resize(k - 1, k);
      for (int r = 0; r < k - 1; ++r) x.row(r) = a.row(rows[r]).head(k);
      const auto sub = column_deleted_permanents(x);
      for (int i = 0; i < m; ++i) {
        Amplitude s{};
        for (int l = 0; l < k; ++l) s += a(i, l) * sub[l];
        weights[i] = std::norm(s);
      }
    }
    double total = 0;
    for (double w : weights) total += w;
    if (!(total >= kWeightFloor)) {
      throw NumericError("conditional sampling mass underflowed (" + std::to_string(total) + ")");
    }
    rows.push_back(static_cast<int>(draw(weights, total, rng)));
  }
  std::vector<int> occ(m, 0);
  for (int r : rows) ++occ[r];
  return FockState(std::move(occ));
}

}  // namespace

SampleRecord sample_cc2017(const Unitary& u, const FockState& input, std::size_t count,
                           std::uint64_t seed, unsigned threads) {
  if (input.is_annotated()) throw InvalidArgument("sampling needs a plain input state");
  const int m = u.modes();
  if (input.modes() != m) throw InvalidArgument("input mode count does not match the unitary");
  SampleRecord record;
  record.seed = seed;
  std::vector<int> photon_modes;
  for (int j = 0; j < m; ++j) photon_modes.insert(photon_modes.end(), input[j], j);
  if (photon_modes.empty()) {
    record.outcomes.assign(count, FockState::vacuum(m));
    return record;
  }
  record.outcomes.resize(count);
  const std::size_t blocks = (count + kSamplesPerStream - 1) / kSamplesPerStream;
  std::vector<std::exception_ptr> errors(blocks);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t b = first; b < blocks; b += stride) {
      try {
        Rng rng = split_stream(seed, b);
        const std::size_t end = std::min(count, (b + 1) * kSamplesPerStream);
        for (std::size_t i = b * kSamplesPerStream; i < end; ++i) {
          record.outcomes[i] = sample_one(u.matrix(), photon_modes, rng);
        }
      } catch (...) {
        errors[b] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(blocks, 1));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w, workers);
    work(0, workers);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return record;
}

}  // namespace photonsim
