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

#include <string>
#include <string_view>
#include <vector>

#include "photonsim/distribution.hpp"
#include "photonsim/state_vector.hpp"

namespace photonsim {

// Photon count over the inclusive mode range [first, last].
// Retained probability below this is rounding noise, not a heralded event.
inline constexpr double kMinRetainedMass = 1e-14;

struct ModeCountConstraint {
  int first;
  int last;
  int count;
};

// Conjunction of mode-count constraints; the empty rule accepts every state.
class PostSelectionRule {
 public:
  PostSelectionRule() = default;
  explicit PostSelectionRule(std::vector<ModeCountConstraint> constraints);

  // Grammar: "count(modes a..b) == k && count(modes c) == j && ...".
  // "and" may replace "&&"; an empty expression or "true" accepts everything.
  static PostSelectionRule parse(std::string_view expression);

  bool operator()(const FockState& state) const;
  bool accepts_all() const { return constraints_.empty(); }
  const std::vector<ModeCountConstraint>& constraints() const { return constraints_; }
  std::string to_string() const;

 private:
  std::vector<ModeCountConstraint> constraints_;
};

struct PostSelected {
  Distribution distribution;  // renormalized to mass 1
  double success_probability;
};

// Throws PostSelectionError when nothing survives.
PostSelected post_select(const Distribution& d, const PostSelectionRule& rule);

// Keeps the accepted terms without renormalizing.
StateVector post_select(const StateVector& psi, const PostSelectionRule& rule);

}  // namespace photonsim
