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

#include "photonsim/time_bin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "photonsim/error.hpp"

namespace photonsim {

void SourceModel::validate() const {
  for (double v : {emission_prob, multi_photon_prob, indistinguishability}) {
    if (!(v >= 0 && v <= 1)) throw InvalidArgument("source probabilities must lie in [0, 1]");
  }
}

FockState source_emit(const SourceModel& source, std::uint64_t period, Rng& rng) {
  const double emit = uniform01(rng);
  const double pair = uniform01(rng);
  const double same = uniform01(rng);
  if (!(emit < source.emission_prob)) return FockState::vacuum(1);
  const std::string stem = "d" + std::to_string(period) + ".";
  std::vector<std::string> tags;
  tags.push_back(same < source.indistinguishability ? std::string(kSignalTag) : stem + "0");
  if (pair < source.multi_photon_prob) tags.push_back(stem + "1");
  return FockState::annotated({std::move(tags)});
}

UnrolledCircuit unroll_time_circuit(const Circuit& tc, int periods, int max_modes) {
  if (periods < 1) throw InvalidArgument("unrolling needs at least one period");
  const int m = tc.modes();
  const auto flat = flatten(tc);
  long long total_delay = 0;
  for (const auto& fc : flat) {
    if (const auto* td = std::get_if<TimeDelay>(fc.component)) total_delay += td->periods;
  }
  const long long bins = periods + total_delay;
  if (bins * m > max_modes) {
    throw CapacityError("unrolled circuit needs " + std::to_string(bins * m) +
                        " modes, budget is " + std::to_string(max_modes));
  }
  const int b = static_cast<int>(bins);
  UnrolledCircuit out{Circuit(m * b, tc.name()), m, b};
  for (const auto& [offset, component] : flat) {
    if (const auto* td = std::get_if<TimeDelay>(component)) {
      Permutation wiring;
      wiring.perm.resize(static_cast<std::size_t>(m) * b);
      for (int k = 0; k < m * b; ++k) wiring.perm[k] = k;
      for (int t = 0; t < b; ++t) wiring.perm[t * m + offset] = ((t + td->periods) % b) * m + offset;
      out.circuit.add(0, std::move(wiring));
    } else {
      for (int t = 0; t < b; ++t) out.circuit.add(t * m + offset, *component);
    }
  }
  return out;
}

namespace {

struct FrameDistribution {
  std::vector<FockState> outcomes;
  std::vector<double> cdf;
};

FrameDistribution tabulate(const Distribution& d) {
  FrameDistribution f;
  double acc = 0;
  for (const auto& [state, p] : d.probabilities()) {
    if (p <= 0) continue;
    acc += p;
    f.outcomes.push_back(state);
    f.cdf.push_back(acc);
  }
  return f;
}

const FockState& draw(const FrameDistribution& f, Rng& rng) {
  const double u = uniform01(rng) * f.cdf.back();
  auto it = std::upper_bound(f.cdf.begin(), f.cdf.end(), u);
  if (it == f.cdf.end()) --it;
  return f.outcomes[it - f.cdf.begin()];
}

}  // namespace

HomResult simulate_hom(const Circuit& tc, const SourceModel& source, const HomOptions& options) {
  source.validate();
  if (tc.modes() < 2) throw InvalidArgument("HOM needs two detector modes");
  if (options.periods < 1 || options.frame_periods < 1 || options.window < 0) {
    throw InvalidArgument("invalid HOM options");
  }
  const int m = tc.modes();
  std::map<int, UnrolledCircuit> layouts;
  std::map<int, Unitary> unitaries;
  std::map<std::string, FrameDistribution> cache;
  const int frame_bins = unroll_time_circuit(tc, options.frame_periods).bins;

  HomResult result;
  result.trace.periods = options.periods;
  const std::int64_t frames = (options.periods + options.frame_periods - 1) / options.frame_periods;
  for (std::int64_t f = 0; f < frames; ++f) {
    const std::int64_t start = f * options.frame_periods;
    const int len = static_cast<int>(std::min<std::int64_t>(options.frame_periods, options.periods - start));
    if (!layouts.count(len)) {
      auto layout = unroll_time_circuit(tc, len);
      unitaries.emplace(len, compute_unitary(layout.circuit));
      layouts.emplace(len, std::move(layout));
    }
    const UnrolledCircuit& layout = layouts.at(len);
    const std::int64_t time_base = f * frame_bins;

    Rng rng = split_stream(options.seed, static_cast<std::uint64_t>(f));
    std::vector<std::vector<std::string>> tags(static_cast<std::size_t>(m) * layout.bins);
    std::map<std::string, std::string> renamed;
    int photons = 0;
    for (int p = 0; p < len; ++p) {
      const FockState emitted = source_emit(source, static_cast<std::uint64_t>(start + p), rng);
      if (emitted.photons() == 0) continue;
      for (const auto& tag : emitted.tags(0)) {
        std::string name = tag;
        if (tag != kSignalTag) {
          auto [it, inserted] = renamed.try_emplace(tag, "u" + std::to_string(renamed.size()));
          name = it->second;
        }
        tags[layout.mode(0, p)].push_back(std::move(name));
        ++photons;
      }
    }
    if (photons == 0) continue;
    const FockState input = FockState::annotated(std::move(tags));
    const std::string key = std::to_string(len) + input.to_string();
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, tabulate(simulate_annotated(unitaries.at(len), input))).first;
    }
    const FockState& outcome = draw(it->second, rng);
    for (int t = 0; t < layout.bins; ++t) {
      for (int detector = 0; detector < 2; ++detector) {
        const int c = outcome[layout.mode(detector, t)];
        if (c > 0) result.trace.events.push_back({detector, time_base + t, c});
      }
    }
  }

  std::vector<std::int64_t> a, b;
  for (const auto& e : result.trace.events) (e.detector == 0 ? a : b).push_back(e.bin);
  std::size_t lo = 0;
  for (std::int64_t ta : a) {
    while (lo < b.size() && b[lo] < ta - options.window) ++lo;
    for (std::size_t j = lo; j < b.size() && b[j] <= ta + options.window; ++j) {
      ++result.histogram[static_cast<int>(b[j] - ta)];
      ++result.coincidences;
    }
  }
  return result;
}

Circuit hom_time_circuit() {
  Circuit c(2, "hom");
  c.add(0, BeamSplitter::from_theta(std::numbers::pi / 4));
  c.add(1, TimeDelay{1});
  c.add(0, BeamSplitter::from_theta(std::numbers::pi / 4));
  return c;
}

}  // namespace photonsim
