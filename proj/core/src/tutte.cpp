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

#include "matroid/tutte.hpp"

#include <unordered_map>

#include "matroid/errors.hpp"
#include "matroid/nbc.hpp"

namespace matroid {

namespace {

/// counts[i][j] = number of subsets A with corank i and nullity j.
std::vector<std::vector<std::uint64_t>> corank_nullity_counts(const Matroid& m) {
  if (m.size() > kSubsetGuard)
    throw GuardError("subset expansion needs n <= " + std::to_string(kSubsetGuard));
  const int n = m.size();
  const int r = m.rank();
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(r) + 1,
                                                 std::vector<std::uint64_t>(n - r + 1, 0));
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s) {
    const ElementSet a(s);
    const int ra = m.rank(a);
    ++counts[static_cast<std::size_t>(r - ra)][static_cast<std::size_t>(a.size() - ra)];
  }
  return counts;
}

BivariatePolynomial by_subsets(const Matroid& m) {
  const auto counts = corank_nullity_counts(m);
  const BivariatePolynomial x1 =
      BivariatePolynomial::variable(0) - BivariatePolynomial::constant(Integer(1));
  const BivariatePolynomial y1 =
      BivariatePolynomial::variable(1) - BivariatePolynomial::constant(Integer(1));
  BivariatePolynomial total;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const BivariatePolynomial xi = x1.pow(static_cast<unsigned>(i));
    for (std::size_t j = 0; j < counts[i].size(); ++j) {
      if (counts[i][j] == 0) continue;
      total += xi * y1.pow(static_cast<unsigned>(j)) * Integer(static_cast<unsigned long>(counts[i][j]));
    }
  }
  return total;
}

/// Minors up to this size are also memoized up to isomorphism; above it the
/// canonical key search costs more than it saves.
constexpr int kIsomorphismMemoGuard = 7;

std::string structural_key(const Matroid& m) {
  std::string key = "s" + std::to_string(m.size()) + ":";
  for (ElementSet b : m.bases()) key += std::to_string(b.mask()) + ",";
  return key;
}

class DeletionContraction {
 public:
  BivariatePolynomial run(const Matroid& m) {
    int pivot = 0;
    for (int e = 1; e <= m.size() && pivot == 0; ++e)
      if (!m.is_loop(e) && !m.is_coloop(e)) pivot = e;
    if (pivot == 0) {
      return BivariatePolynomial::monomial({m.coloops().size(), m.loops().size()}, Integer(1));
    }
    const std::string key = structural_key(m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::string iso_key;
    if (m.size() <= kIsomorphismMemoGuard) {
      iso_key = canonical_key(m, kIsomorphismMemoGuard);
      if (auto it = memo_.find(iso_key); it != memo_.end()) {
        memo_.emplace(key, it->second);
        return it->second;
      }
    }
    const ElementSet e = ElementSet::singleton(pivot);
    BivariatePolynomial out = run(minor(m, e, ElementSet{}).matroid);
    out += run(minor(m, ElementSet{}, e).matroid);
    memo_.emplace(key, out);
    if (!iso_key.empty()) memo_.emplace(iso_key, out);
    return out;
  }

 private:
  // Structural keys carry an "s" prefix, so one table holds both kinds.
  std::unordered_map<std::string, BivariatePolynomial> memo_;
};

BivariatePolynomial by_activities(const Matroid& m) {
  const ElementSet ground = m.ground_set();
  BivariatePolynomial total;
  for (ElementSet b : m.bases()) {
    int internal = 0;
    int external = 0;
    b.for_each([&](int e) {
      // e is internally active if no smaller f outside B can replace it.
      bool active = true;
      (ground - b).for_each([&](int f) {
        if (active && f < e && m.is_basis(b.without(e).with(f))) active = false;
      });
      if (active) ++internal;
    });
    (ground - b).for_each([&](int e) {
      bool active = true;
      b.for_each([&](int f) {
        if (active && f < e && m.is_basis(b.without(f).with(e))) active = false;
      });
      if (active) ++external;
    });
    total.add_term({internal, external}, Integer(1));
  }
  return total;
}

}  // namespace

std::string_view method_name(TutteMethod method) {
  switch (method) {
    case TutteMethod::kSubsetExpansion:
      return "subset-expansion";
    case TutteMethod::kDeletionContraction:
      return "deletion-contraction";
    case TutteMethod::kActivities:
      return "activities";
  }
  return "unknown";
}

TutteMethod parse_tutte_method(std::string_view name) {
  for (TutteMethod method : {TutteMethod::kSubsetExpansion, TutteMethod::kDeletionContraction,
                             TutteMethod::kActivities})
    if (method_name(method) == name) return method;
  throw InputError("unknown Tutte method '" + std::string(name) +
                   "' (expected subset-expansion, deletion-contraction or activities)");
}

BivariatePolynomial tutte(const Matroid& m, TutteMethod method) {
  switch (method) {
    case TutteMethod::kSubsetExpansion:
      return by_subsets(m);
    case TutteMethod::kDeletionContraction:
      return DeletionContraction().run(m);
    case TutteMethod::kActivities:
      return by_activities(m);
  }
  throw InputError("unknown Tutte method");
}

BivariatePolynomial tutte(const Matroid& m) {
  BivariatePolynomial a = by_subsets(m);
  const BivariatePolynomial b = DeletionContraction().run(m);
  if (!(a == b))
    throw CrossCheckError("Tutte polynomial: subset expansion " + a.to_string({"x", "y"}) +
                          " differs from deletion-contraction " + b.to_string({"x", "y"}));
  return a;
}

BivariatePolynomial corank_nullity(const Matroid& m) {
  const auto counts = corank_nullity_counts(m);
  BivariatePolynomial out;
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (std::size_t j = 0; j < counts[i].size(); ++j)
      out.add_term({static_cast<int>(i), static_cast<int>(j)},
                   Integer(static_cast<unsigned long>(counts[i][j])));
  return out;
}

UnivariatePolynomial tutte_to_char(const Matroid& m) {
  const UnivariatePolynomial one_minus_lambda =
      UnivariatePolynomial::constant(Integer(1)) - UnivariatePolynomial::variable(0);
  UnivariatePolynomial out = tutte(m).substitute<1>({one_minus_lambda, UnivariatePolynomial{}});
  if (m.rank() % 2 != 0) out = -out;
  return out;
}

UnivariatePolynomial chromatic_poly(const Graph& g) {
  for (const auto& [u, v] : g.edges)
    if (u == v) return {};
  const CharacteristicPolynomial chi = char_poly(from_graph(g));
  return UnivariatePolynomial::monomial({connected_components(g)}, Integer(1)) * chi.value;
}

}  // namespace matroid
