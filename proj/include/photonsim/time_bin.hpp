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
#include <vector>

#include "photonsim/backends.hpp"
#include "photonsim/circuit.hpp"
#include "photonsim/random.hpp"

namespace photonsim {

struct SourceModel {
  double emission_prob = 1;
  double multi_photon_prob = 0;
  double indistinguishability = 1;

  void validate() const;
};

inline constexpr std::string_view kSignalTag = "s";

// Zero, one or two photons in a single mode. Signal photons carry kSignalTag;
// the second photon of a pair, and signal photons failing the
// indistinguishability draw, get a tag unique to (period, photon).
FockState source_emit(const SourceModel& source, std::uint64_t period, Rng& rng);

// A time circuit laid out over bins: spatial mode i in bin t is mode t * m + i.
struct UnrolledCircuit {
  Circuit circuit;
  int spatial_modes;
  int bins;

  int mode(int spatial, int bin) const { return bin * spatial_modes + spatial; }
};

// Bins = periods + total delay. Spatial components are replicated in every
// bin; TimeDelay(d) on mode i routes (i, t) to (i, t + d), wrapping within the
// window so that the wiring stays a permutation.
UnrolledCircuit unroll_time_circuit(const Circuit& tc, int periods, int max_modes = 512);

// One click: detectors do not resolve photon number, count is kept for reference.
struct DetectionEvent {
  int detector;
  std::int64_t bin;
  int count;
};

struct DetectionTrace {
  std::vector<DetectionEvent> events;
  std::int64_t periods = 0;
};

struct HomOptions {
  std::int64_t periods = 100000;
  // Source periods simulated jointly; photons in different frames never meet.
  int frame_periods = 4;
  // Detector-pair delays within +-window bins are histogrammed.
  int window = 5;
  std::uint64_t seed = 0;
};

struct HomResult {
  std::map<int, std::uint64_t> histogram;  // tau = t_B - t_A
  DetectionTrace trace;
  std::uint64_t coincidences = 0;
};

// Source on spatial mode 0; detectors A and B on spatial modes 0 and 1.
HomResult simulate_hom(const Circuit& tc, const SourceModel& source, const HomOptions& options);

// Balanced beam splitter, one-period delay on the lower arm, balanced beam splitter.
Circuit hom_time_circuit();

}  // namespace photonsim
