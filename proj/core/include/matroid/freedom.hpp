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

#ifndef MATROID_FREEDOM_HPP_
#define MATROID_FREEDOM_HPP_

#include <map>
#include <vector>

#include "matroid/g_invariant.hpp"
#include "matroid/matroid.hpp"
#include "matroid/polynomial.hpp"

namespace matroid {

/// F(s): with ones at b_1 < ... < b_r, the bases are the r-subsets
/// c_1 < ... < c_r with c_j >= b_j for every j.
Matroid freedom_matroid(const RankSequence& s);

/// F(s) built step by step: loops before b_1, an isthmus at each b_j, and a
/// free extension of the current matroid at every other position.
Matroid freedom_matroid_incremental(const RankSequence& s);

/// s dominates t: every prefix of s has at least as many ones as t's.
bool dominates(const RankSequence& s, const RankSequence& t);

/// Each symbol [s] as a combination of the G(F(t)): result[s] holds the
/// coefficients indexed by t. Throws CrossCheckError if the system is not
/// triangular with respect to dominance.
std::map<RankSequence, SymbolVector> freedom_expansion(int n, int r);

/// Coefficients c_t (zeros omitted) with G(m) = sum c_t G(F(t)), certified
/// by checking sum c_t T(F(t)) = T(m).
std::map<RankSequence, Rational> tutte_in_freedom_basis(const Matroid& m);

/// Dimension over Q of the span of T(F(s)) over all C(n, r) sequences.
int tutte_span_dimension(int n, int r);

/// True iff the specialization of v to Tutte polynomials vanishes.
bool verify_syzygy(const SymbolVector& v);

/// sum coeff_t T(F(t)).
RationalBivariate freedom_tutte_combination(const std::map<RankSequence, Rational>& coeffs);
/// True iff freedom_tutte_combination(coeffs) is zero.
bool freedom_tutte_relation(const std::map<RankSequence, Rational>& coeffs);

}  // namespace matroid

#endif  // MATROID_FREEDOM_HPP_
