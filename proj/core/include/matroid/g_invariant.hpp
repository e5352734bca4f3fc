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

#ifndef MATROID_G_INVARIANT_HPP_
#define MATROID_G_INVARIANT_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "matroid/matroid.hpp"
#include "matroid/polynomial.hpp"

namespace matroid {

/// Default guard for the n! permutation sum.
inline constexpr int kGPermutationGuard = 9;

/// A length-n (0,1)-sequence; position i (1-based) is bit i - 1 of `mask`.
///
/// Sequences compare by n, then by mask. Among sequences with the same n and
/// number of ones this is a linear extension of dominance with the maximum
/// 1^r 0^{n-r} first.
struct RankSequence {
  int n = 0;
  std::uint64_t mask = 0;

  /// Parses "110100". Throws InputError on other characters or n > 64.
  static RankSequence parse(const std::string& bits);
  /// 1^r 0^{n-r}.
  static RankSequence leading_ones(int n, int r);
  /// Ones at the given 1-based positions.
  static RankSequence with_ones(int n, ElementSet positions);

  int ones() const { return std::popcount(mask); }
  bool bit(int position) const { return ((mask >> (position - 1)) & 1U) != 0; }
  /// Hamming weight of the first `length` entries.
  int prefix_weight(int length) const;
  ElementSet positions() const { return ElementSet(mask); }
  std::string to_string() const;

  friend auto operator<=>(const RankSequence&, const RankSequence&) = default;
};

/// All length-n sequences with r ones, in increasing order.
std::vector<RankSequence> rank_sequences(int n, int r);

/// Formal combination of symbols [s] with coefficients in Coeff.
template <class Coeff>
struct SymbolCombination {
  int n = 0;
  int r = 0;
  std::map<RankSequence, Coeff> coefficients;

  Coeff coefficient(const RankSequence& s) const {
    auto it = coefficients.find(s);
    return it == coefficients.end() ? Coeff(0) : it->second;
  }
  void add(const RankSequence& s, const Coeff& c) {
    if (c == 0) return;
    Coeff& slot = coefficients[s];
    slot += c;
    if (slot == 0) coefficients.erase(s);
  }
  Coeff total() const {
    Coeff sum(0);
    for (const auto& [s, c] : coefficients) sum += c;
    return sum;
  }
  /// "48 [110010] + 132 [110100] + 540 [111000]": dominance-minimal first.
  std::string to_string() const {
    if (coefficients.empty()) return "0";
    std::string out;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
      const bool negative = it->second < 0;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      out += matroid::to_string(Coeff(negative ? Coeff(-it->second) : it->second));
      out += " [" + it->first.to_string() + "]";
    }
    return out;
  }

  friend bool operator==(const SymbolCombination&, const SymbolCombination&) = default;
};

using GInvariant = SymbolCombination<Integer>;
using SymbolVector = SymbolCombination<Rational>;

/// Parses "[1010100] - [1011000] + 2 [1100100]" or "1/2*[10]"; all
/// sequences must share a length and a number of ones.
SymbolVector parse_symbol_vector(const std::string& text);

/// r_j = r({pi(1..j)}) - r({pi(1..j-1)}); perm holds pi(1), ..., pi(n).
RankSequence rank_sequence(const Matroid& m, std::span<const int> perm);

enum class GMethod { kPermutations, kChainDp };

/// Sum of [r(pi)] over all n! permutations.
GInvariant g_invariant(const Matroid& m, GMethod method = GMethod::kChainDp);

/// Reverses every sequence and swaps zeros and ones.
GInvariant g_dual(const GInvariant& g);

/// Closed form for a paving matroid from the sizes of its non-trivial
/// copoints; the number of trivial copoints follows from n, r and the sizes.
GInvariant paving_g(int n, int r, std::span<const int> copoint_sizes);
/// Closed form from explicit non-trivial copoints (validated as paving).
GInvariant paving_g(int n, int r, std::span<const ElementSet> copoints);
GInvariant sparse_paving_g(int n, int r, int alpha);

/// Sends [s] to sum_m (x-1)^{r - wt_m} (y-1)^{m - wt_m} / (m! (n-m)!).
RationalBivariate specialize_to_tutte(const SymbolVector& v);
/// Same map on an integral G-invariant; the result must be integral.
BivariatePolynomial specialize_to_tutte(const GInvariant& g);

/// The unshifted map [s] -> sum_m x^{r - wt_m} y^{m - wt_m} / (m! (n-m)!),
/// which sends G(M) to the corank-nullity polynomial R(M; x, y).
BivariatePolynomial specialize_to_corank_nullity(const GInvariant& g);

SymbolVector to_symbol_vector(const GInvariant& g);

}  // namespace matroid

#endif  // MATROID_G_INVARIANT_HPP_
