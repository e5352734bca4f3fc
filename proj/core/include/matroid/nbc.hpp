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

#ifndef MATROID_NBC_HPP_
#define MATROID_NBC_HPP_

#include <map>
#include <vector>

#include "matroid/matroid.hpp"
#include "matroid/polynomial.hpp"

namespace matroid {

/// {C - min C : C a circuit}, in glex order. Throws InputError if m has a loop.
std::vector<ElementSet> broken_circuits(const Matroid& m);

/// nbc-sets of a loopless matroid grouped by their closure.
struct NbcCatalog {
  /// Flat -> nbc-sets whose closure is that flat, each list in glex order.
  std::map<ElementSet, std::vector<ElementSet>, GlexLess> by_flat;

  /// Whitney numbers of the second kind: entry k is the number of nbc-sets of
  /// size k.
  std::vector<Integer> whitney_numbers() const;
  /// All nbc-sets, in glex order.
  std::vector<ElementSet> all() const;
  std::vector<ElementSet> of_size(int k) const;
  bool contains(ElementSet s) const;
};

/// Enumerates nbc-sets both by broken-circuit containment and by the
/// closure-minimum criterion (each i_t is the minimum of cl({i_t, ..., i_k}))
/// and throws CrossCheckError if the two disagree.
NbcCatalog nbc_sets(const Matroid& m);

/// chi(M; lambda). zero_due_to_loop is set (and value is 0) when m has a loop.
struct CharacteristicPolynomial {
  UnivariatePolynomial value;
  bool zero_due_to_loop = false;
};

/// Computes chi both as sum over flats of mu(empty, X) lambda^(r - r(X)) and
/// from the nbc Whitney numbers; throws CrossCheckError on disagreement.
CharacteristicPolynomial char_poly(const Matroid& m);

/// Sum over flats of mu(empty, X) lambda^(r - r(X)).
UnivariatePolynomial char_poly_mobius(const Matroid& m);
/// Sum over k of (-1)^k w_k lambda^(r - k).
UnivariatePolynomial char_poly_whitney(const std::vector<Integer>& whitney, int rank);

}  // namespace matroid

#endif  // MATROID_NBC_HPP_
