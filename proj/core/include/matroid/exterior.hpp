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

#ifndef MATROID_EXTERIOR_HPP_
#define MATROID_EXTERIOR_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>

#include "matroid/element_set.hpp"
#include "matroid/numeric.hpp"

namespace matroid {

/// Element of the exterior algebra over Q with generators e_1, ..., e_n.
/// A term (S, c) stands for c * e_S where e_S is the wedge of the generators
/// of S in increasing order; all signs derive from that normal form.
class ExteriorElement {
 public:
  using Terms = std::map<ElementSet, Rational, GlexLess>;

  ExteriorElement() = default;

  static ExteriorElement one() { return monomial(ElementSet{}); }
  static ExteriorElement generator(int label) { return monomial(ElementSet::singleton(label)); }
  static ExteriorElement monomial(ElementSet s, const Rational& c = 1);
  /// e_{i_1} ^ ... ^ e_{i_k} for an arbitrary sequence; zero on repeats.
  static ExteriorElement from_sequence(std::span<const int> labels);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(ElementSet s) const;
  void add_term(ElementSet s, const Rational& c);

  /// Common degree of all terms; empty for zero or inhomogeneous elements.
  std::optional<int> grade() const;
  /// Largest label occurring in any term.
  int max_label() const;

  ExteriorElement& operator+=(const ExteriorElement& o);
  ExteriorElement& operator-=(const ExteriorElement& o);
  ExteriorElement& operator*=(const Rational& s);
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator-(ExteriorElement a) { return a *= Rational(-1); }
  friend ExteriorElement operator*(const Rational& s, ExteriorElement a) { return a *= s; }
  friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Signed combination with terms in descending glex order, e.g.
  /// "e23 - e13 + e12"; "0" for zero and "1" for the unit monomial.
  std::string to_string() const;

 private:
  Terms terms_;
};

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);

/// Linear extension of d(e_T) = sum_j (-1)^(j-1) e_{T - i_j}.
ExteriorElement boundary(const ExteriorElement& a);

/// Parses the to_string() format: terms like "e23", "-2*e{1,10}", "1/2 e13",
/// or a bare rational for multiples of 1.
ExteriorElement parse_exterior_element(const std::string& text);

}  // namespace matroid

#endif  // MATROID_EXTERIOR_HPP_
