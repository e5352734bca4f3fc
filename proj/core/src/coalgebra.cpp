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

#include "matroid/coalgebra.hpp"

#include <random>

#include "matroid/errors.hpp"
#include "matroid/polynomial.hpp"
#include "matroid/tutte.hpp"

namespace matroid {

namespace {

constexpr int kVertexGuard = 16;

void check_subset_guard(const Matroid& m) {
  if (m.size() > kSubsetGuard)
    throw GuardError("subset sums need n <= " + std::to_string(kSubsetGuard));
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numerator(-9, 9);
  std::uniform_int_distribution<int> denominator(1, 5);
  const int p = numerator(rng);
  const int q = denominator(rng);
  return make_rational(p, q);
}

Rational power(const Rational& base, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

Rational evaluate(const BivariatePolynomial& p, const Rational& u, const Rational& v) {
  return p.evaluate<Rational>({u, v});
}

struct Split {
  int corank = 0;
  int nullity = 0;
  BivariatePolynomial left;   // R(M|A)
  BivariatePolynomial right;  // R(M/A)
};

template <class F>
void for_each_split(const Matroid& m, F&& f) {
  check_subset_guard(m);
  const std::uint64_t count = std::uint64_t{1} << m.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const ElementSet a(mask);
    const int ra = m.rank(a);
    f(Split{m.rank() - ra, a.size() - ra, corank_nullity(restriction(m, a).matroid),
            corank_nullity(contraction(m, a).matroid)});
  }
}

bool check_points(const Matroid& m, std::span<const ConvolutionPoint> points, bool lambda_form) {
  const BivariatePolynomial whole = corank_nullity(m);
  std::vector<Split> splits;
  for_each_split(m, [&](Split s) { splits.push_back(std::move(s)); });
  for (const ConvolutionPoint& p : points) {
    const Rational lhs = evaluate(whole, p.x * p.y, p.lambda * p.xi);
    Rational rhs = 0;
    for (const Split& s : splits) {
      const Rational prefactor = lambda_form
                                     ? power(p.lambda, s.corank) * power(-p.y, s.nullity)
                                     : power(p.x, s.corank) * power(-p.xi, s.nullity);
      rhs += prefactor * evaluate(s.left, -p.x, -p.lambda) * evaluate(s.right, p.y, p.xi);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

void check_graph_size(const Graph& g) {
  if (g.vertex_count > kVertexGuard)
    throw GuardError("vertex-subset sums need at most " + std::to_string(kVertexGuard) +
                     " vertices");
}

/// Calls f(P(G|U), P(G|V-U)) for every vertex subset U.
template <class F>
void for_each_vertex_split(const Graph& g, F&& f) {
  check_graph_size(g);
  const std::uint64_t count = std::uint64_t{1} << g.vertex_count;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<int> inside;
    std::vector<int> outside;
    for (int v = 1; v <= g.vertex_count; ++v)
      ((mask >> (v - 1)) & 1U ? inside : outside).push_back(v);
    f(chromatic_poly(induced_subgraph(g, inside)), chromatic_poly(induced_subgraph(g, outside)));
  }
}

}  // namespace

std::uint64_t TensorSum::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& [key, term] : terms) total += term.multiplicity;
  return total;
}

TensorSum comultiply(const Matroid& m) {
  check_subset_guard(m);
  TensorSum sum;
  const std::uint64_t count = std::uint64_t{1} << m.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const ElementSet a(mask);
    Matroid left = restriction(m, a).matroid;
    Matroid right = contraction(m, a).matroid;
    std::string left_key = canonical_key(left);
    std::string right_key = canonical_key(right);
    if (!is_exact_key(left_key) || !is_exact_key(right_key)) {
      left_key = "A=" + a.to_string();
      right_key.clear();
    }
    auto [it, inserted] = sum.terms.try_emplace({left_key, right_key},
                                                TensorTerm{std::move(left), std::move(right), 0});
    ++it->second.multiplicity;
  }
  return sum;
}

std::vector<ConvolutionPoint> sample_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ConvolutionPoint> out;
  for (std::size_t i = 0; i < count; ++i) {
    ConvolutionPoint p;
    p.x = random_rational(rng);
    p.y = random_rational(rng);
    p.lambda = random_rational(rng);
    p.xi = random_rational(rng);
    out.push_back(p);
  }
  return out;
}

std::vector<std::pair<Rational, Rational>> sample_pairs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i < count; ++i) {
    Rational x = random_rational(rng);
    Rational y = random_rational(rng);
    out.emplace_back(x, y);
  }
  return out;
}

bool verify_R_convolution(const Matroid& m, std::span<const ConvolutionPoint> points) {
  return check_points(m, points, false);
}

bool verify_R_convolution_lambda_form(const Matroid& m, std::span<const ConvolutionPoint> points) {
  return check_points(m, points, true);
}

bool verify_R_convolution_symbolic(const Matroid& m) {
  if (m.size() > kPermutationGuard)
    throw GuardError("symbolic convolution check needs n <= " + std::to_string(kPermutationGuard));
  using Poly4 = Polynomial<4, Integer>;
  const Poly4 x = Poly4::variable(0);
  const Poly4 y = Poly4::variable(1);
  const Poly4 lambda = Poly4::variable(2);
  const Poly4 xi = Poly4::variable(3);
  const Poly4 lhs = corank_nullity(m).substitute<4>({x * y, lambda * xi});
  Poly4 rhs;
  for_each_split(m, [&](const Split& s) {
    Poly4 term = x.pow(static_cast<unsigned>(s.corank)) * (-xi).pow(static_cast<unsigned>(s.nullity));
    term *= s.left.substitute<4>({-x, -lambda});
    term *= s.right.substitute<4>({y, xi});
    rhs += term;
  });
  return lhs == rhs;
}

bool verify_chromatic_convolution(const Graph& g,
                                  std::span<const std::pair<Rational, Rational>> points) {
  const UnivariatePolynomial whole = chromatic_poly(g);
  std::vector<std::pair<UnivariatePolynomial, UnivariatePolynomial>> splits;
  for_each_vertex_split(g, [&](UnivariatePolynomial a, UnivariatePolynomial b) {
    splits.emplace_back(std::move(a), std::move(b));
  });
  for (const auto& [x, y] : points) {
    const Rational lhs = evaluate_at(whole, Rational(x + y));
    Rational rhs = 0;
    for (const auto& [a, b] : splits) rhs += evaluate_at(a, x) * evaluate_at(b, y);
    if (lhs != rhs) return false;
  }
  return true;
}

bool verify_chromatic_convolution_symbolic(const Graph& g) {
  const BivariatePolynomial x = BivariatePolynomial::variable(0);
  const BivariatePolynomial y = BivariatePolynomial::variable(1);
  const BivariatePolynomial lhs = chromatic_poly(g).substitute<2>({x + y});
  BivariatePolynomial rhs;
  for_each_vertex_split(g, [&](const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    rhs += a.substitute<2>({x}) * b.substitute<2>({y});
  });
  return lhs == rhs;
}

}  // namespace matroid
