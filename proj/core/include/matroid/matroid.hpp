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

#ifndef MATROID_MATROID_HPP_
#define MATROID_MATROID_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matroid/element_set.hpp"
#include "matroid/numeric.hpp"

namespace matroid {

/// Default guard for loops over all 2^n subsets of the ground set.
inline constexpr int kSubsetGuard = 20;
/// Default guard for loops over all n! orderings of the ground set.
inline constexpr int kPermutationGuard = 10;

namespace detail {
struct MatroidCache;
}

/// A matroid on {1, ..., n} given by its (non-empty) family of bases, stored
/// deduplicated in increasing mask order. Values are immutable; derived data
/// (rank table, circuits) is computed once on first use and shared between
/// copies.
class Matroid {
 public:
  /// The empty matroid: n = 0 with the single basis {}.
  Matroid();

  /// Trusted constructor for families already known to satisfy the basis
  /// axioms. Sorts and deduplicates but performs no exchange check.
  static Matroid from_valid_bases(int n, std::vector<ElementSet> bases);

  int size() const { return n_; }
  int rank() const { return r_; }
  ElementSet ground_set() const { return ElementSet::range(n_); }
  const std::vector<ElementSet>& bases() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }
  bool is_basis(ElementSet s) const;

  int rank(ElementSet s) const;
  bool is_independent(ElementSet s) const { return rank(s) == s.size(); }
  ElementSet closure(ElementSet s) const;
  bool is_flat(ElementSet s) const { return closure(s) == s; }

  bool is_loop(int e) const;
  bool is_coloop(int e) const;
  ElementSet loops() const;
  ElementSet coloops() const;
  bool is_simple() const;

  /// Minimal dependent sets, in glex order.
  const std::vector<ElementSet>& circuits() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, int r, std::vector<ElementSet> bases);
  const std::vector<std::uint8_t>* rank_table() const;

  int n_ = 0;
  int r_ = 0;
  std::vector<ElementSet> bases_;
  std::shared_ptr<detail::MatroidCache> cache_;
};

/// Validated constructor: every basis must be a subset of {1..n}, all of the
/// same size, and the family must satisfy basis exchange. Violations raise
/// InputError naming a witness.
Matroid from_bases(int n, std::vector<ElementSet> bases);

/// Matroid whose independent sets are the subsets containing none of the
/// listed circuits and, when `rank` is given, of size at most `rank`. Every
/// listed set must turn out to be a circuit of the result and the maximal
/// independent sets must satisfy basis exchange.
Matroid from_circuits(int n, std::span<const ElementSet> circuits, std::optional<int> rank = {});

Matroid uniform_matroid(int r, int n);

/// Paving matroid of rank r on n elements with the given non-trivial
/// copoints (each of size >= r, pairwise meeting in at most r - 2 elements).
Matroid paving_matroid(int n, int r, std::span<const ElementSet> copoints);

/// Multigraph with vertices 1..vertex_count; edge i (1-based) is edges[i-1].
/// Loops and parallel edges are allowed.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Cycle matroid: edge labels 1..|edges|, bases are maximal spanning forests.
Matroid from_graph(const Graph& g);
int connected_components(const Graph& g);
/// Subgraph induced on `vertices` (1-based labels), relabeled in order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

struct Flat {
  ElementSet set;
  int rank = 0;
  Integer mobius;  ///< mu(cl(empty), set)
};

/// All flats ordered by rank, then by glex order within a rank.
struct FlatLattice {
  std::vector<Flat> flats;

  const Flat* find(ElementSet set) const;
};

FlatLattice flat_lattice(const Matroid& m);

Matroid dual(const Matroid& m);

/// A matroid obtained from another by relabeling a subset of its elements;
/// labels[i] is the original label of new element i + 1.
struct LabeledMatroid {
  Matroid matroid;
  std::vector<int> labels;
};

/// m / contract \ del, relabeled to 1..n' preserving the original order.
/// Contracting a dependent set contracts a maximal independent subset and
/// deletes the rest.
LabeledMatroid minor(const Matroid& m, ElementSet del, ElementSet contract);
/// m | a (restriction to a).
LabeledMatroid restriction(const Matroid& m, ElementSet a);
/// m / a.
LabeledMatroid contraction(const Matroid& m, ElementSet a);

/// Ground set 1..(n1 + n2) with the second summand's labels shifted by n1.
Matroid direct_sum(const Matroid& a, const Matroid& b);

/// Deletes loops and keeps the smallest label of each parallel class.
LabeledMatroid simplify(const Matroid& m);

/// Applies a permutation: element e of m becomes perm[e - 1].
Matroid relabel(const Matroid& m, std::span<const int> perm);

/// Isomorphism-class key. When n <= exact_guard the key is exact: equal keys
/// if and only if the matroids are isomorphic. Above the guard it is an
/// invariant fingerprint prefixed with "~", equal for isomorphic matroids but
/// not necessarily distinct for non-isomorphic ones.
std::string canonical_key(const Matroid& m, int exact_guard = kPermutationGuard);
bool is_exact_key(const std::string& key);

/// Indicator vectors of the bases in descending lexicographic order.
std::vector<std::vector<int>> base_polytope_vertices(const Matroid& m);

}  // namespace matroid

#endif  // MATROID_MATROID_HPP_
