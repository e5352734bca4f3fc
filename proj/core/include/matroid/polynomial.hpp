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

#ifndef MATROID_POLYNOMIAL_HPP_
#define MATROID_POLYNOMIAL_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "matroid/errors.hpp"
#include "matroid/numeric.hpp"

namespace matroid {

/// Sparse polynomial in N variables with exact coefficients. Terms are kept
/// in descending lexicographic exponent order (for two variables: x-degree
/// descending, then y-degree descending) and zero coefficients are never
/// stored.
template <std::size_t N, class Coeff>
class Polynomial {
 public:
  using Exponent = std::array<int, N>;
  using Terms = std::map<Exponent, Coeff, std::greater<>>;

  Polynomial() = default;

  static Polynomial constant(const Coeff& c) { return monomial(Exponent{}, c); }
  static Polynomial variable(std::size_t index) {
    Exponent e{};
    e[index] = 1;
    return monomial(e, Coeff(1));
  }
  static Polynomial monomial(const Exponent& e, const Coeff& c) {
    Polynomial p;
    p.add_term(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Exponent& e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Highest exponent of the given variable, -1 for the zero polynomial.
  int degree(std::size_t var = 0) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = e[var] > d ? e[var] : d;
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Coeff(-1); }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, Coeff(ca * cb));
      }
    }
    return out;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned k) const {
    Polynomial out = constant(Coeff(1));
    Polynomial base = *this;
    while (k != 0) {
      if ((k & 1U) != 0) out *= base;
      k >>= 1U;
      if (k != 0) base *= base;
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Evaluates at a point whose coordinates live in T (T must be
  /// constructible from Coeff).
  template <class T>
  T evaluate(const std::array<T, N>& point) const {
    T total(0);
    for (const auto& [e, c] : terms_) {
      T term(c);
      for (std::size_t i = 0; i < N; ++i)
        for (int k = 0; k < e[i]; ++k) term *= point[i];
      total += term;
    }
    return total;
  }

  /// Replaces variable i by images[i], a polynomial in M variables.
  template <std::size_t M>
  Polynomial<M, Coeff> substitute(const std::array<Polynomial<M, Coeff>, N>& images) const {
    std::array<std::map<int, Polynomial<M, Coeff>>, N> powers;
    auto power_of = [&](std::size_t i, int k) -> const Polynomial<M, Coeff>& {
      auto it = powers[i].find(k);
      if (it == powers[i].end())
        it = powers[i].emplace(k, images[i].pow(static_cast<unsigned>(k))).first;
      return it->second;
    };
    Polynomial<M, Coeff> out;
    for (const auto& [e, c] : terms_) {
      Polynomial<M, Coeff> term = Polynomial<M, Coeff>::constant(c);
      for (std::size_t i = 0; i < N; ++i)
        if (e[i] != 0) term *= power_of(i, e[i]);
      out += term;
    }
    return out;
  }

  /// Human-readable form such as "x^3 + 4xy - 2y". Non-integral rational
  /// coefficients are written "p/q*x".
  std::string to_string(const std::array<std::string_view, N>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool negative = c < 0;
      Coeff magnitude = negative ? Coeff(-c) : c;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] == 0) continue;
        mono += names[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      const std::string coeff_text = matroid::to_string(magnitude);
      if (mono.empty()) {
        os << coeff_text;
      } else if (magnitude != 1) {
        os << coeff_text << (coeff_text.find('/') != std::string::npos ? "*" : "") << mono;
      } else {
        os << mono;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

using UnivariatePolynomial = Polynomial<1, Integer>;
using BivariatePolynomial = Polynomial<2, Integer>;
using RationalBivariate = Polynomial<2, Rational>;

/// Coefficient-wise conversion, e.g. integer to rational polynomials.
template <class To, std::size_t N, class From>
Polynomial<N, To> convert_coefficients(const Polynomial<N, From>& p) {
  Polynomial<N, To> out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, To(c));
  return out;
}

/// Univariate evaluation shorthand.
template <class Coeff, class T>
T evaluate_at(const Polynomial<1, Coeff>& p, const T& value) {
  return p.template evaluate<T>({value});
}

/// Integer polynomial from a rational one; throws CrossCheckError naming
/// `what` if a coefficient is not integral.
template <std::size_t N>
Polynomial<N, Integer> to_integer_polynomial(const Polynomial<N, Rational>& p, const char* what) {
  Polynomial<N, Integer> out;
  for (const auto& [e, c] : p.terms()) {
    if (!is_integral(c))
      throw CrossCheckError(std::string(what) + ": non-integral coefficient " + to_string(c));
    out.add_term(e, Integer(c.get_num()));
  }
  return out;
}

}  // namespace matroid

#endif  // MATROID_POLYNOMIAL_HPP_
