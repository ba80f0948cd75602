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

#include "photonsim/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "photonsim/error.hpp"
#include "photonsim/random.hpp"

namespace photonsim {

void Distribution::add(const FockState& state, double probability) {
  if (!(probability >= 0) || !std::isfinite(probability)) {
    throw NumericError("invalid probability for " + state.to_string());
  }
  if (!probs_.empty() && probs_.begin()->first.modes() != state.modes()) {
    throw InvalidArgument("distribution states must share a mode count");
  }
  probs_[state] += probability;
}

double Distribution::operator[](const FockState& state) const {
  auto it = probs_.find(state);
  return it == probs_.end() ? 0.0 : it->second;
}

double Distribution::total_mass() const {
  double total = 0;
  for (const auto& [state, p] : probs_) total += p;
  return total;
}

std::vector<std::pair<FockState, double>> Distribution::sorted() const {
  std::vector<std::pair<std::uint64_t, std::pair<FockState, double>>> keyed;
  keyed.reserve(probs_.size());
  for (const auto& [state, p] : probs_) {
    keyed.push_back({rank(state), {state, p}});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.second != b.second.second) return a.second.second > b.second.second;
    if (a.second.first.photons() != b.second.first.photons()) {
      return a.second.first.photons() < b.second.first.photons();
    }
    return a.first < b.first;
  });
  std::vector<std::pair<FockState, double>> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

double total_variation_distance(const Distribution& a, const Distribution& b) {
  double total = 0;
  for (const auto& [state, p] : a.probabilities()) total += std::abs(p - b[state]);
  for (const auto& [state, p] : b.probabilities()) {
    if (!a.probabilities().count(state)) total += p;
  }
  return total / 2;
}

Distribution empirical_distribution(const SampleRecord& samples) {
  if (samples.outcomes.empty()) throw InvalidArgument("empty sample record");
  std::map<FockState, std::size_t> counts;
  for (const auto& s : samples.outcomes) ++counts[s];
  Distribution d;
  const double total = static_cast<double>(samples.count());
  for (const auto& [state, c] : counts) d.add(state, static_cast<double>(c) / total);
  return d;
}

SampleRecord sample_distribution(const Distribution& d, std::size_t count, std::uint64_t seed) {
  std::vector<const FockState*> states;
  std::vector<double> cdf;
  double acc = 0;
  for (const auto& [state, p] : d.probabilities()) {
    if (p <= 0) continue;
    acc += p;
    states.push_back(&state);
    cdf.push_back(acc);
  }
  if (states.empty()) throw NumericError("cannot sample from an empty distribution");
  SampleRecord record;
  record.seed = seed;
  record.outcomes.reserve(count);
  Rng rng = split_stream(seed, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = uniform01(rng) * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    record.outcomes.push_back(*states[it - cdf.begin()]);
  }
  return record;
}

}  // namespace photonsim
