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

#ifndef MATROID_COALGEBRA_HPP_
#define MATROID_COALGEBRA_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matroid/matroid.hpp"
#include "matroid/numeric.hpp"

namespace matroid {

/// Default seed for pseudorandom sample points.
inline constexpr std::uint64_t kDefaultSampleSeed = 20260101;

struct TensorTerm {
  Matroid left;   ///< representative of M|A
  Matroid right;  ///< representative of M/A
  std::uint64_t multiplicity = 0;
};

/// Terms keyed by (key of M|A, key of M/A). Keys are exact canonical keys
/// when both sides are within the canonicalization guard; otherwise the key
/// names the subset A so the term stays separate.
struct TensorSum {
  std::map<std::pair<std::string, std::string>, TensorTerm> terms;

  std::uint64_t total_multiplicity() const;
};

/// Delta M = sum over A of M|A (x) M/A.
TensorSum comultiply(const Matroid& m);

struct ConvolutionPoint {
  Rational x, y, lambda, xi;
};

/// Fixed-seed points with coordinates p/q, |p| <= 9, 1 <= q <= 5.
std::vector<ConvolutionPoint> sample_points(std::size_t count, std::uint64_t seed = kDefaultSampleSeed);
std::vector<std::pair<Rational, Rational>> sample_pairs(std::size_t count,
                                                        std::uint64_t seed = kDefaultSampleSeed);

/// Checks R(M; xy, lambda xi) = sum_A x^{r - r(A)} (-xi)^{|A| - r(A)}
///   R(M|A; -x, -lambda) R(M/A; y, xi) at each point.
bool verify_R_convolution(const Matroid& m, std::span<const ConvolutionPoint> points);
/// The same identity as polynomials in x, y, lambda, xi (n <= 10).
bool verify_R_convolution_symbolic(const Matroid& m);
/// Variant with prefactor lambda^{r - r(A)} (-y)^{|A| - r(A)}; this form
/// does not hold in general (already false for U_{1,1}).
bool verify_R_convolution_lambda_form(const Matroid& m, std::span<const ConvolutionPoint> points);

/// Checks P(G; x + y) = sum over vertex sets U of P(G|U; x) P(G|V-U; y).
bool verify_chromatic_convolution(const Graph& g,
                                  std::span<const std::pair<Rational, Rational>> points);
/// The same identity as polynomials in x and y.
bool verify_chromatic_convolution_symbolic(const Graph& g);

}  // namespace matroid

#endif  // MATROID_COALGEBRA_HPP_
