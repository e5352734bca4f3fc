// Copyright 2026 The Authors.
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

#include "matroid/exterior.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "matroid/errors.hpp"

namespace matroid {

ExteriorElement ExteriorElement::monomial(ElementSet s, const Rational& c) {
  ExteriorElement out;
  out.add_term(s, c);
  return out;
}

ExteriorElement ExteriorElement::from_sequence(std::span<const int> labels) {
  ExteriorElement out = one();
  for (int label : labels) {
    if (label < 1 || label > kMaxLabel)
      throw InputError("generator label " + std::to_string(label) + " out of range");
    out = wedge(out, generator(label));
  }
  return out;
}

Rational ExteriorElement::coefficient(ElementSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorElement::add_term(ElementSet s, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> ExteriorElement::grade() const {
  if (terms_.empty()) return std::nullopt;
  const int k = terms_.begin()->first.size();
  for (const auto& [s, c] : terms_)
    if (s.size() != k) return std::nullopt;
  return k;
}

int ExteriorElement::max_label() const {
  int out = 0;
  for (const auto& [s, c] : terms_) out = std::max(out, s.max_label());
  return out;
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& o) {
  for (const auto& [s, c] : o.terms_) add_term(s, Rational(-c));
  return *this;
}

ExteriorElement& ExteriorElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [set, c] : terms_) c *= s;
  return *this;
}

std::string ExteriorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [s, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    if (s.empty()) {
      out += matroid::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += matroid::to_string(magnitude) + "*";
    out += "e" + s.to_string();
  }
  return out;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  ExteriorElement out;
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      const int sign = merge_sign(sa, sb);
      if (sign == 0) continue;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(sa | sb, c);
    }
  }
  return out;
}

ExteriorElement boundary(const ExteriorElement& a) {
  ExteriorElement out;
  for (const auto& [s, c] : a.terms()) {
    int position = 0;
    s.for_each([&](int e) {
      out.add_term(s.without(e), position % 2 == 0 ? c : Rational(-c));
      ++position;
    });
  }
  return out;
}

ExteriorElement parse_exterior_element(const std::string& text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.empty()) throw InputError("empty exterior element");

  ExteriorElement out;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("exterior element '" + text + "': " + why + " at offset " + std::to_string(pos));
  };
  while (pos < compact.size()) {
    int sign = 1;
    if (compact[pos] == '+' || compact[pos] == '-') {
      sign = compact[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    Rational coeff = 1;
    std::size_t start = pos;
    while (pos < compact.size() &&
           (std::isdigit(static_cast<unsigned char>(compact[pos])) || compact[pos] == '/'))
      ++pos;
    const bool has_coeff = pos > start;
    if (has_coeff) coeff = parse_rational(compact.substr(start, pos - start));
    if (pos < compact.size() && compact[pos] == '*') {
      if (!has_coeff) fail("'*' without coefficient");
      ++pos;
    }
    ElementSet s;
    if (pos < compact.size() && compact[pos] == 'e') {
      ++pos;
      std::vector<int> labels;
      if (pos < compact.size() && compact[pos] == '{') {
        ++pos;
        while (pos < compact.size() && compact[pos] != '}') {
          start = pos;
          while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos]))) ++pos;
          if (pos == start) fail("expected a label");
          labels.push_back(std::stoi(compact.substr(start, pos - start)));
          if (pos < compact.size() && compact[pos] == ',') ++pos;
        }
        if (pos >= compact.size()) fail("unterminated '{'");
        ++pos;
      } else {
        while (pos < compact.size() && std::isdigit(static_cast<unsigned char>(compact[pos])))
          labels.push_back(compact[pos++] - '0');
        if (labels.empty()) fail("expected labels after 'e'");
      }
      // Labels in the given order: e21 = -e12.
      ExteriorElement mono = ExteriorElement::from_sequence(labels);
      if (mono.is_zero()) continue;
      const auto& [set, c] = *mono.terms().begin();
      s = set;
      coeff *= c;
    } else if (!has_coeff) {
      fail("expected a coefficient or monomial");
    }
    out.add_term(s, sign < 0 ? Rational(-coeff) : coeff);
  }
  return out;
}

}  // namespace matroid
