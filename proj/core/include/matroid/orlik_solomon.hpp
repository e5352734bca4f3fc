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

#ifndef MATROID_ORLIK_SOLOMON_HPP_
#define MATROID_ORLIK_SOLOMON_HPP_

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "matroid/exterior.hpp"
#include "matroid/matroid.hpp"
#include "matroid/nbc.hpp"
#include "matroid/polynomial.hpp"

namespace matroid {

namespace detail {
struct NormalFormCache;
}

/// Orlik-Solomon algebra A(M) = Lambda(E) / I(M) of a simple matroid, with the
/// nbc-monomials as basis. Normal forms of single monomials are memoized;
/// the cache is internally synchronized so a context may be shared between
/// threads.
class OsContext {
 public:
  /// Throws InputError unless m is simple (simplify() first otherwise).
  explicit OsContext(Matroid m);
  ~OsContext();
  OsContext(OsContext&&) noexcept;
  OsContext& operator=(OsContext&&) noexcept;

  const Matroid& matroid() const { return matroid_; }
  const NbcCatalog& nbc() const { return nbc_; }
  bool is_nbc(ElementSet s) const;

  /// The nbc normal form of the single monomial omega_S.
  ExteriorElement normal_form(ElementSet s) const;

 private:
  Matroid matroid_;
  NbcCatalog nbc_;
  std::vector<std::uint8_t> nbc_table_;
  /// (broken circuit, element removed from its circuit), glex order of the
  /// broken circuit; for equal broken circuits the smaller element first.
  std::vector<std::pair<ElementSet, int>> broken_;
  std::unique_ptr<detail::NormalFormCache> cache_;
};

/// The unique representative of a modulo I(M) supported on nbc-monomials.
/// The glex-largest non-nbc monomial is rewritten first: dependent monomials
/// vanish, otherwise the glex-least broken circuit C - m inside it is used to
/// expand omega_I through d(e_{m u I}).
ExteriorElement reduce_to_nbc(const OsContext& ctx, const ExteriorElement& a);

/// The generators d(e_C) of I(M), one per circuit in glex order.
std::vector<ExteriorElement> os_ideal_generators(const Matroid& m);

struct OsDimensions {
  std::map<ElementSet, int, GlexLess> by_flat;
  std::vector<int> by_degree;
};

/// Dimensions of A^X(M) and A^k(M) from nbc counts, cross-checked against
/// (-1)^r(X) mu(empty, X).
OsDimensions os_dimensions(const OsContext& ctx);

/// sum_k dim A^k t^k, cross-checked against (-t)^r chi(M; -1/t).
UnivariatePolynomial hilbert_series(const OsContext& ctx);

struct Degree1MapReport {
  /// Every d(e_C), C a circuit of the source, maps into I(target).
  bool ideal_preserved = false;
  std::optional<ElementSet> failing_circuit;
  /// The degree-1 images span A^1 of the target; since A is generated in
  /// degree 1 the induced map is then surjective.
  bool surjective = false;
  bool hilbert_match = false;

  bool is_isomorphism() const { return ideal_preserved && surjective && hilbert_match; }
};

/// Checks the algebra map induced by e_i -> images[i - 1] (each a degree-1
/// element of the target's exterior algebra). Throws InputError for images of
/// other degrees or a wrong number of images.
Degree1MapReport verify_degree1_map(const OsContext& source, const OsContext& target,
                                    const std::vector<ExteriorElement>& images);

}  // namespace matroid

#endif  // MATROID_ORLIK_SOLOMON_HPP_
