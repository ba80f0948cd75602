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

#include "photonsim/postselect.hpp"

#include <cctype>

#include "photonsim/error.hpp"

namespace photonsim {

PostSelectionRule::PostSelectionRule(std::vector<ModeCountConstraint> constraints)
    : constraints_(std::move(constraints)) {
  for (const auto& c : constraints_) {
    if (c.first < 0 || c.last < c.first || c.count < 0) {
      throw InvalidArgument("invalid mode-count constraint");
    }
  }
}

namespace {

class RuleParser {
 public:
  explicit RuleParser(std::string_view text) : text_(text) {}

  PostSelectionRule parse() {
    skip_space();
    if (done() || try_word("true")) {
      skip_space();
      if (!done()) fail("unexpected trailing input");
      return {};
    }
    std::vector<ModeCountConstraint> constraints;
    while (true) {
      constraints.push_back(constraint());
      skip_space();
      if (done()) break;
      if (!try_literal("&&") && !try_word("and")) fail("expected '&&'");
    }
    return PostSelectionRule(std::move(constraints));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("bad post-selection rule '" + std::string(text_) + "': " + msg, 1,
                     static_cast<int>(pos_) + 1);
  }

  bool done() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_literal(std::string_view lit) {
    skip_space();
    if (text_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  bool try_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  void expect(std::string_view lit) {
    if (!try_literal(lit)) fail("expected '" + std::string(lit) + "'");
  }

  int number() {
    skip_space();
    const std::size_t start = pos_;
    long long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000000) fail("number too large");
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(v);
  }

  ModeCountConstraint constraint() {
    if (!try_word("count")) fail("expected 'count('");
    expect("(");
    if (!try_word("modes") && !try_word("mode")) fail("expected 'modes'");
    ModeCountConstraint c{};
    c.first = number();
    c.last = try_literal("..") ? number() : c.first;
    if (c.last < c.first) fail("empty mode range");
    expect(")");
    expect("==");
    c.count = number();
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PostSelectionRule PostSelectionRule::parse(std::string_view expression) {
  return RuleParser(expression).parse();
}

bool PostSelectionRule::operator()(const FockState& state) const {
  for (const auto& c : constraints_) {
    if (c.last >= state.modes()) {
      throw InvalidArgument("rule refers to mode " + std::to_string(c.last) + " of a " +
                            std::to_string(state.modes()) + "-mode state");
    }
    int total = 0;
    for (int i = c.first; i <= c.last; ++i) total += state[i];
    if (total != c.count) return false;
  }
  return true;
}

std::string PostSelectionRule::to_string() const {
  if (constraints_.empty()) return "true";
  std::string out;
  for (const auto& c : constraints_) {
    if (!out.empty()) out += " && ";
    out += "count(modes " + std::to_string(c.first);
    if (c.last != c.first) out += ".." + std::to_string(c.last);
    out += ") == " + std::to_string(c.count);
  }
  return out;
}

PostSelected post_select(const Distribution& d, const PostSelectionRule& rule) {
  double kept = 0;
  for (const auto& [state, p] : d.probabilities()) {
    if (rule(state)) kept += p;
  }
  if (!(kept > kMinRetainedMass)) throw PostSelectionError("post-selection annihilates the state");
  PostSelected out{{}, kept};
  for (const auto& [state, p] : d.probabilities()) {
    if (rule(state)) out.distribution.add(state, p / kept);
  }
  return out;
}

StateVector post_select(const StateVector& psi, const PostSelectionRule& rule) {
  StateVector out;
  for (const auto& [state, amp] : psi.terms()) {
    if (rule(state)) out.add(state, amp);
  }
  return out;
}

}  // namespace photonsim
