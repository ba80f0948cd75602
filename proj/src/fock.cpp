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

#include "photonsim/fock.hpp"

#include <cctype>
#include <limits>
#include <map>

#include "photonsim/error.hpp"

namespace photonsim {

std::uint64_t fock_dim(int m, int n) {
  if (m < 1 || n < 0) {
    throw InvalidArgument("fock_dim requires m >= 1 and n >= 0");
  }
  const unsigned __int128 total = static_cast<unsigned __int128>(m) + n - 1;
  const int k = n < m - 1 ? n : m - 1;
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (total - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw CapacityError("Fock space of " + std::to_string(n) + " photons over " +
                          std::to_string(m) + " modes overflows 64-bit indexing");
    }
  }
  return static_cast<std::uint64_t>(result);
}

FockState::FockState(std::vector<int> occupations) : occ_(std::move(occupations)) {
  for (int v : occ_) {
    if (v < 0) throw InvalidArgument("negative occupation number");
  }
}

FockState::FockState(std::initializer_list<int> occupations)
    : FockState(std::vector<int>(occupations)) {}

FockState FockState::annotated(std::vector<std::vector<std::string>> tags) {
  FockState s;
  s.occ_.reserve(tags.size());
  for (const auto& mode : tags) {
    for (const auto& tag : mode) {
      if (tag.empty() || tag.find_first_of(",{}|>") != std::string::npos) {
        throw InvalidArgument("invalid photon tag '" + tag + "'");
      }
    }
    s.occ_.push_back(static_cast<int>(mode.size()));
  }
  if (s.photons() > 0) s.tags_ = std::move(tags);
  return s;
}

FockState FockState::vacuum(int m) { return FockState(std::vector<int>(m, 0)); }

int FockState::photons() const {
  int n = 0;
  for (int v : occ_) n += v;
  return n;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

FockState FockState::parse(std::string_view text) {
  const std::string_view body = trim(text);
  const auto fail = [&](const std::string& msg, std::size_t pos) -> ParseError {
    return ParseError("bad Fock state '" + std::string(text) + "': " + msg, 1,
                      static_cast<int>(pos) + 1);
  };
  if (body.size() < 3 || body.front() != '|' || body.back() != '>') {
    throw fail("expected |n1,...,nm>", 0);
  }
  std::vector<int> occ;
  std::vector<std::vector<std::string>> tags;
  bool any_tags = false;
  std::size_t i = 1;
  const std::size_t end = body.size() - 1;
  while (true) {
    while (i < end && body[i] == ' ') ++i;
    if (i >= end) throw fail("missing mode", i);
    if (body[i] == '{') {
      const std::size_t close = body.find('}', i);
      if (close == std::string_view::npos || close > end) throw fail("unterminated '{'", i);
      std::vector<std::string> mode_tags;
      std::string_view inner = body.substr(i + 1, close - i - 1);
      while (true) {
        const std::size_t comma = inner.find(',');
        const std::string_view tag = trim(inner.substr(0, comma));
        if (tag.empty() || tag.find_first_of("{|>") != std::string_view::npos) {
          throw fail("empty or invalid tag", i);
        }
        mode_tags.emplace_back(tag);
        if (comma == std::string_view::npos) break;
        inner.remove_prefix(comma + 1);
      }
      occ.push_back(static_cast<int>(mode_tags.size()));
      tags.push_back(std::move(mode_tags));
      any_tags = true;
      i = close + 1;
    } else {
      std::size_t j = i;
      int value = 0;
      while (j < end && std::isdigit(static_cast<unsigned char>(body[j]))) {
        value = value * 10 + (body[j] - '0');
        if (value > 1000000) throw fail("occupation too large", i);
        ++j;
      }
      if (j == i) throw fail("expected a number or '{'", i);
      occ.push_back(value);
      tags.emplace_back();
      i = j;
    }
    while (i < end && body[i] == ' ') ++i;
    if (i == end) break;
    if (body[i] != ',') throw fail("expected ','", i);
    ++i;
  }
  if (!any_tags) return FockState(std::move(occ));
  for (std::size_t k = 0; k < occ.size(); ++k) {
    if (occ[k] != static_cast<int>(tags[k].size())) {
      throw fail("annotated states must tag every photon", 0);
    }
  }
  return annotated(std::move(tags));
}

std::string FockState::to_string() const {
  std::string out = "|";
  for (std::size_t k = 0; k < occ_.size(); ++k) {
    if (k) out += ',';
    if (is_annotated() && occ_[k] > 0) {
      out += '{';
      for (std::size_t t = 0; t < tags_[k].size(); ++t) {
        if (t) out += ',';
        out += tags_[k][t];
      }
      out += '}';
    } else {
      out += std::to_string(occ_[k]);
    }
  }
  out += '>';
  return out;
}

std::uint64_t rank(const FockState& state) {
  if (state.is_annotated()) throw InvalidArgument("rank requires a plain Fock state");
  const int m = state.modes();
  int remaining = state.photons();
  std::uint64_t index = 0;
  for (int i = 0; i + 1 < m; ++i) {
    const int s = state[i];
    if (s < remaining) index += fock_dim(m - i, remaining - s - 1);
    remaining -= s;
  }
  return index;
}

FockState unrank(std::uint64_t index, int m, int n) {
  if (index >= fock_dim(m, n)) throw InvalidArgument("Fock basis index out of range");
  std::vector<int> occ(m, 0);
  int remaining = n;
  for (int i = 0; i + 1 < m; ++i) {
    int v = remaining;
    for (; v > 0; --v) {
      const std::uint64_t count = fock_dim(m - i - 1, remaining - v);
      if (index < count) break;
      index -= count;
    }
    occ[i] = v;
    remaining -= v;
  }
  occ[m - 1] = remaining;
  return FockState(std::move(occ));
}

bool next_state(std::vector<int>& occ) {
  const int m = static_cast<int>(occ.size());
  for (int i = m - 2; i >= 0; --i) {
    if (occ[i] > 0) {
      int tail = 1;
      for (int j = i + 1; j < m; ++j) {
        tail += occ[j];
        occ[j] = 0;
      }
      --occ[i];
      occ[i + 1] = tail;
      return true;
    }
  }
  return false;
}

FockBasis::FockBasis(int m, int n) : m_(m), n_(n), size_(fock_dim(m, n)) {}

std::uint64_t FockBasis::index_of(const FockState& state) const {
  if (state.modes() != m_ || state.photons() != n_) {
    throw InvalidArgument("state " + state.to_string() + " is not in this basis");
  }
  return rank(state);
}

std::vector<FockState> FockBasis::states() const {
  std::vector<FockState> out;
  out.reserve(size_);
  std::vector<int> occ(m_, 0);
  occ[0] = n_;
  do {
    out.emplace_back(occ);
  } while (next_state(occ));
  return out;
}

FockState expand_polarization(const FockState& state) {
  std::vector<int> occ(2 * static_cast<std::size_t>(state.modes()), 0);
  if (!state.is_annotated()) {
    if (state.photons() != 0) {
      throw InvalidArgument("polarisation expansion needs P:H/P:V tags on every photon");
    }
    return FockState(std::move(occ));
  }
  for (int i = 0; i < state.modes(); ++i) {
    for (const auto& tag : state.tags(i)) {
      if (tag == kHorizontalTag) {
        ++occ[2 * i];
      } else if (tag == kVerticalTag) {
        ++occ[2 * i + 1];
      } else {
        throw InvalidArgument("tag '" + tag + "' is not a polarisation (P:H or P:V)");
      }
    }
  }
  return FockState(std::move(occ));
}

std::vector<std::pair<std::string, FockState>> group_by_tag(const FockState& state) {
  if (!state.is_annotated()) {
    if (state.photons() != 0) throw InvalidArgument("group_by_tag needs a tagged state");
    return {};
  }
  std::map<std::string, std::vector<int>> groups;
  for (int i = 0; i < state.modes(); ++i) {
    for (const auto& tag : state.tags(i)) {
      auto [it, inserted] = groups.try_emplace(tag, state.modes(), 0);
      ++it->second[i];
    }
  }
  std::vector<std::pair<std::string, FockState>> out;
  out.reserve(groups.size());
  for (auto& [tag, occ] : groups) out.emplace_back(tag, FockState(std::move(occ)));
  return out;
}

}  // namespace photonsim
