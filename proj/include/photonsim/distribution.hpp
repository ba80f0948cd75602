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

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "photonsim/fock.hpp"

namespace photonsim {

// Probabilities over plain Fock states. The total mass is the sum of the
// stored probabilities; it is 1 for exact simulation and may be less after
// filtering.
class Distribution {
 public:
  void add(const FockState& state, double probability);

  double operator[](const FockState& state) const;
  double total_mass() const;
  std::size_t size() const { return probs_.size(); }
  bool empty() const { return probs_.empty(); }
  const std::map<FockState, double>& probabilities() const { return probs_; }

  // Descending probability, ties broken by canonical rank.
  std::vector<std::pair<FockState, double>> sorted() const;

 private:
  std::map<FockState, double> probs_;
};

double total_variation_distance(const Distribution& a, const Distribution& b);

struct SampleRecord {
  std::vector<FockState> outcomes;
  std::uint64_t seed = 0;

  std::size_t count() const { return outcomes.size(); }
};

Distribution empirical_distribution(const SampleRecord& samples);

// Independent draws by inverse-CDF lookup.
SampleRecord sample_distribution(const Distribution& d, std::size_t count, std::uint64_t seed);

}  // namespace photonsim
