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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace photonsim {

// Number of Fock states of n photons over m modes, binomial(m+n-1, n).
// Throws CapacityError if the value does not fit in 64 bits.
std::uint64_t fock_dim(int m, int n);

// Occupation numbers over m modes, optionally with one opaque tag per photon.
// Tags are either absent for every photon or present for every photon.
class FockState {
 public:
  FockState() = default;
  explicit FockState(std::vector<int> occupations);
  FockState(std::initializer_list<int> occupations);

  // One tag list per mode; occupations are the list sizes.
  static FockState annotated(std::vector<std::vector<std::string>> tags);
  static FockState vacuum(int m);

  // Accepts "|1,0,2>" and annotated forms such as "|{P:H},0>" or "|{a,b},0>".
  static FockState parse(std::string_view text);
  std::string to_string() const;

  int modes() const { return static_cast<int>(occ_.size()); }
  int photons() const;
  int operator[](int mode) const { return occ_[mode]; }
  std::span<const int> occupations() const { return occ_; }

  bool is_annotated() const { return !tags_.empty(); }
  const std::vector<std::string>& tags(int mode) const { return tags_.at(mode); }
  FockState plain() const { return FockState(occ_); }

  auto operator<=>(const FockState&) const = default;
  bool operator==(const FockState&) const = default;

 private:
  std::vector<int> occ_;
  std::vector<std::vector<std::string>> tags_;
};

// Canonical ordering is descending lexicographic: |n,0,...,0> has rank 0.
std::uint64_t rank(const FockState& state);
FockState unrank(std::uint64_t index, int m, int n);

// Advances to the next state in canonical order; returns false after the last.
bool next_state(std::vector<int>& occupations);

class FockBasis {
 public:
  FockBasis(int m, int n);

  int modes() const { return m_; }
  int photons() const { return n_; }
  std::uint64_t size() const { return size_; }

  FockState operator[](std::uint64_t index) const { return unrank(index, m_, n_); }
  std::uint64_t index_of(const FockState& state) const;
  std::vector<FockState> states() const;

 private:
  int m_;
  int n_;
  std::uint64_t size_;
};

inline constexpr std::string_view kHorizontalTag = "P:H";
inline constexpr std::string_view kVerticalTag = "P:V";

// Spatial mode i becomes modes (2i, 2i+1) = (H, V).
FockState expand_polarization(const FockState& state);

// Splits a fully tagged state into one plain state per tag, sorted by tag.
std::vector<std::pair<std::string, FockState>> group_by_tag(const FockState& state);

}  // namespace photonsim
