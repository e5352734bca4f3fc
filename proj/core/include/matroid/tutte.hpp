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

#ifndef MATROID_TUTTE_HPP_
#define MATROID_TUTTE_HPP_

#include <string_view>

#include "matroid/matroid.hpp"
#include "matroid/polynomial.hpp"

namespace matroid {

enum class TutteMethod {
  kSubsetExpansion,
  kDeletionContraction,
  kActivities,
};

std::string_view method_name(TutteMethod method);
/// Accepts "subset-expansion", "deletion-contraction" and "activities".
TutteMethod parse_tutte_method(std::string_view name);

/// T(M; x, y) by a single method.
BivariatePolynomial tutte(const Matroid& m, TutteMethod method);

/// T(M; x, y) by subset expansion, cross-checked against deletion-contraction.
/// Throws CrossCheckError if they differ.
BivariatePolynomial tutte(const Matroid& m);

/// R(M; u, v) = sum over A of u^{r - r(A)} v^{|A| - r(A)}.
BivariatePolynomial corank_nullity(const Matroid& m);

/// (-1)^r T(1 - lambda, 0); zero when m has a loop.
UnivariatePolynomial tutte_to_char(const Matroid& m);

/// P(G; x) = x^{c(G)} chi(M(G); x); zero when g has a loop edge.
UnivariatePolynomial chromatic_poly(const Graph& g);

}  // namespace matroid

#endif  // MATROID_TUTTE_HPP_
