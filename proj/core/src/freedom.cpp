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

#include "matroid/freedom.hpp"

#include "matroid/errors.hpp"
#include "matroid/tutte.hpp"

namespace matroid {

namespace {

void check_sequence(const RankSequence& s) {
  if (s.n < 0 || s.n > kMaxLabel) throw InputError("sequence length outside 0..64");
  if (!ElementSet::range(s.n).contains(ElementSet(s.mask)))
    throw InputError("sequence has ones beyond its length");
}

void check_shape(int n, int r) {
  if (n < 0 || n > kSubsetGuard || r < 0 || r > n)
    throw InputError("need 0 <= r <= n <= " + std::to_string(kSubsetGuard) + ", got n=" +
                     std::to_string(n) + ", r=" + std::to_string(r));
}

/// Row s, column t: g_s(F(t)), with sequences in increasing order.
struct FreedomSystem {
  std::vector<RankSequence> sequences;
  std::vector<std::vector<Integer>> matrix;
};

FreedomSystem freedom_system(int n, int r) {
  check_shape(n, r);
  FreedomSystem sys{rank_sequences(n, r), {}};
  const std::size_t k = sys.sequences.size();
  sys.matrix.assign(k, std::vector<Integer>(k, 0));
  for (std::size_t t = 0; t < k; ++t) {
    const GInvariant g = g_invariant(freedom_matroid(sys.sequences[t]));
    for (std::size_t s = 0; s < k; ++s) {
      const Integer c = g.coefficient(sys.sequences[s]);
      if (c != 0 && !dominates(sys.sequences[s], sys.sequences[t]))
        throw CrossCheckError("[" + sys.sequences[s].to_string() + "] occurs in G(F(" +
                              sys.sequences[t].to_string() + ")) but does not dominate it");
      sys.matrix[s][t] = c;
    }
    if (sys.matrix[t][t] == 0)
      throw CrossCheckError("zero diagonal entry for " + sys.sequences[t].to_string());
  }
  return sys;
}

/// Solves matrix * c = rhs for upper triangular matrix.
std::vector<Rational> back_substitute(const std::vector<std::vector<Integer>>& matrix,
                                      std::vector<Rational> rhs) {
  const std::size_t k = rhs.size();
  std::vector<Rational> c(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    Rational acc = rhs[i];
    for (std::size_t j = i + 1; j < k; ++j) acc -= Rational(matrix[i][j]) * c[j];
    c[i] = acc / Rational(matrix[i][i]);
  }
  return c;
}

}  // namespace

Matroid freedom_matroid(const RankSequence& s) {
  check_sequence(s);
  const std::vector<int> b = s.positions().labels();
  std::vector<ElementSet> bases;
  for_each_k_subset(ElementSet::range(s.n), s.ones(), [&](ElementSet c) {
    const std::vector<int> labels = c.labels();
    for (std::size_t j = 0; j < b.size(); ++j)
      if (labels[j] < b[j]) return;
    bases.push_back(c);
  });
  return Matroid::from_valid_bases(s.n, std::move(bases));
}

Matroid freedom_matroid_incremental(const RankSequence& s) {
  check_sequence(s);
  // Bases of the matroid on 1..p, together with its independent sets.
  std::vector<ElementSet> bases{ElementSet{}};
  bool seen_one = false;
  for (int p = 1; p <= s.n; ++p) {
    const ElementSet e = ElementSet::singleton(p);
    if (s.bit(p)) {
      for (ElementSet& base : bases) base |= e;
      seen_one = true;
    } else if (seen_one) {
      const Matroid current = Matroid::from_valid_bases(p - 1, bases);
      std::vector<ElementSet> grown = bases;
      for_each_k_subset(current.ground_set(), current.rank() - 1, [&](ElementSet i) {
        if (current.is_independent(i)) grown.push_back(i | e);
      });
      bases = std::move(grown);
    }
  }
  return Matroid::from_valid_bases(s.n, std::move(bases));
}

bool dominates(const RankSequence& s, const RankSequence& t) {
  if (s.n != t.n) throw InputError("dominance compares sequences of equal length");
  for (int j = 1; j <= s.n; ++j)
    if (s.prefix_weight(j) < t.prefix_weight(j)) return false;
  return true;
}

std::map<RankSequence, SymbolVector> freedom_expansion(int n, int r) {
  const FreedomSystem sys = freedom_system(n, r);
  const std::size_t k = sys.sequences.size();
  // G(F(t)) = sum_s A[s][t] [s], so [s] = sum_t inv(A)[t][s] G(F(t)).
  std::map<RankSequence, SymbolVector> out;
  for (std::size_t s = 0; s < k; ++s) {
    std::vector<Rational> unit(k, 0);
    unit[s] = 1;
    const std::vector<Rational> column = back_substitute(sys.matrix, unit);
    SymbolVector v{n, r, {}};
    for (std::size_t t = 0; t < k; ++t) v.add(sys.sequences[t], column[t]);
    out.emplace(sys.sequences[s], std::move(v));
  }
  return out;
}

std::map<RankSequence, Rational> tutte_in_freedom_basis(const Matroid& m) {
  const FreedomSystem sys = freedom_system(m.size(), m.rank());
  const GInvariant g = g_invariant(m);
  std::vector<Rational> rhs;
  for (const RankSequence& s : sys.sequences) rhs.emplace_back(g.coefficient(s));
  const std::vector<Rational> c = back_substitute(sys.matrix, rhs);
  std::map<RankSequence, Rational> out;
  for (std::size_t t = 0; t < c.size(); ++t)
    if (c[t] != 0) out.emplace(sys.sequences[t], c[t]);
  const RationalBivariate recombined = freedom_tutte_combination(out);
  const RationalBivariate expected = convert_coefficients<Rational>(tutte(m));
  if (!(recombined == expected))
    throw CrossCheckError("freedom-basis recombination " + recombined.to_string({"x", "y"}) +
                          " differs from T(M) = " + expected.to_string({"x", "y"}));
  return out;
}

int tutte_span_dimension(int n, int r) {
  check_shape(n, r);
  std::vector<BivariatePolynomial> polys;
  std::map<std::array<int, 2>, std::size_t> columns;
  for (const RankSequence& s : rank_sequences(n, r)) {
    polys.push_back(tutte(freedom_matroid(s), TutteMethod::kSubsetExpansion));
    for (const auto& [e, c] : polys.back().terms()) columns.emplace(e, columns.size());
  }
  std::vector<std::vector<Rational>> rows;
  for (const BivariatePolynomial& p : polys) {
    std::vector<Rational> row(columns.size(), 0);
    for (const auto& [e, c] : p.terms()) row[columns.at(e)] = c;
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

bool verify_syzygy(const SymbolVector& v) { return specialize_to_tutte(v).is_zero(); }

RationalBivariate freedom_tutte_combination(const std::map<RankSequence, Rational>& coeffs) {
  RationalBivariate total;
  for (const auto& [s, c] : coeffs) {
    const Matroid f = freedom_matroid(s);
    total += convert_coefficients<Rational>(tutte(f, TutteMethod::kSubsetExpansion)) * c;
  }
  return total;
}

bool freedom_tutte_relation(const std::map<RankSequence, Rational>& coeffs) {
  return freedom_tutte_combination(coeffs).is_zero();
}

}  // namespace matroid
