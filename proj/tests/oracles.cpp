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

#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace matroid::oracle {

int rank(const Matroid& m, ElementSet s) {
  int best = 0;
  for (ElementSet b : m.bases()) best = std::max(best, (b & s).size());
  return best;
}

std::vector<ElementSet> circuits(const Matroid& m) {
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.size()); ++mask) {
    const ElementSet s(mask);
    if (rank(m, s) == s.size()) continue;
    bool minimal = true;
    for (int e : s.labels())
      if (rank(m, s.without(e)) != s.size() - 1) minimal = false;
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), GlexLess{});
  return out;
}

UnivariatePolynomial char_poly(const Matroid& m) {
  UnivariatePolynomial out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
    const ElementSet a(mask);
    out.add_term({m.rank() - rank(m, a)}, Integer(a.size() % 2 == 0 ? 1 : -1));
  }
  return out;
}

namespace {

/// Deletes or contracts the single element e and renumbers.
Matroid remove(const Matroid& m, int e, bool contract) {
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    if (contract != b.contains(e)) continue;
    const ElementSet rest = b.without(e);
    std::uint64_t low = rest.mask() & ((std::uint64_t{1} << (e - 1)) - 1);
    std::uint64_t high = (rest.mask() >> e) << (e - 1);
    bases.emplace_back(low | high);
  }
  return Matroid::from_valid_bases(m.size() - 1, bases);
}

}  // namespace

BivariatePolynomial tutte(const Matroid& m) {
  if (m.size() == 0) return BivariatePolynomial::constant(Integer(1));
  const int e = m.size();
  const bool loop = std::none_of(m.bases().begin(), m.bases().end(),
                                 [e](ElementSet b) { return b.contains(e); });
  const bool coloop = std::all_of(m.bases().begin(), m.bases().end(),
                                  [e](ElementSet b) { return b.contains(e); });
  if (loop) return BivariatePolynomial::variable(1) * tutte(remove(m, e, false));
  if (coloop) return BivariatePolynomial::variable(0) * tutte(remove(m, e, true));
  return tutte(remove(m, e, false)) + tutte(remove(m, e, true));
}

std::map<std::string, Integer> g_invariant(const Matroid& m) {
  std::vector<int> perm(static_cast<std::size_t>(m.size()));
  std::iota(perm.begin(), perm.end(), 1);
  std::map<std::string, Integer> out;
  do {
    std::string seq;
    ElementSet prefix;
    int previous = 0;
    for (int e : perm) {
      prefix = prefix.with(e);
      const int current = rank(m, prefix);
      seq += current > previous ? '1' : '0';
      previous = current;
    }
    out[seq] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Integer count_colorings(const Graph& g, int k) {
  if (g.vertex_count == 0) return 1;
  if (k == 0) return 0;
  std::vector<int> color(static_cast<std::size_t>(g.vertex_count), 0);
  Integer count = 0;
  while (true) {
    bool proper = true;
    for (const auto& [u, v] : g.edges)
      if (color[u - 1] == color[v - 1]) proper = false;
    if (proper) ++count;
    std::size_t i = 0;
    while (i < color.size() && color[i] == k - 1) color[i++] = 0;
    if (i == color.size()) break;
    ++color[i];
  }
  return count;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  ExteriorElement out;
  for (const auto& [s, c] : a.terms()) {
    for (const auto& [t, d] : b.terms()) {
      std::vector<int> seq = s.labels();
      for (int e : t.labels()) seq.push_back(e);
      int swaps = 0;
      bool repeated = false;
      for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = 0; j + 1 < seq.size() - i; ++j) {
          if (seq[j] == seq[j + 1]) repeated = true;
          if (seq[j] > seq[j + 1]) {
            std::swap(seq[j], seq[j + 1]);
            ++swaps;
          }
        }
      for (std::size_t j = 0; j + 1 < seq.size(); ++j)
        if (seq[j] == seq[j + 1]) repeated = true;
      if (repeated) continue;
      out.add_term(s | t, (swaps % 2 == 0 ? Rational(1) : Rational(-1)) * c * d);
    }
  }
  return out;
}

namespace {

/// Row-reduced basis over Q, rows as maps from monomial to coefficient.
using Row = std::map<ElementSet, Rational, GlexLess>;

class Span {
 public:
  void insert(Row row) {
    row = reduce(std::move(row));
    if (row.empty()) return;
    const ElementSet pivot = row.begin()->first;
    const Rational lead = row.begin()->second;
    for (auto& [k, v] : row) v /= lead;
    for (auto& [p, existing] : rows_) {
      auto it = existing.find(pivot);
      if (it == existing.end()) continue;
      const Rational f = it->second;
      for (const auto& [k, v] : row) {
        existing[k] -= f * v;
        if (existing[k] == 0) existing.erase(k);
      }
    }
    rows_.emplace(pivot, std::move(row));
  }
  Row reduce(Row row) const {
    for (const auto& [pivot, basis] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      const Rational f = it->second;
      for (const auto& [k, v] : basis) {
        row[k] -= f * v;
        if (row[k] == 0) row.erase(k);
      }
    }
    return row;
  }

 private:
  std::map<ElementSet, Row, GlexLess> rows_;
};

}  // namespace

bool in_os_ideal(const Matroid& m, const ExteriorElement& a) {
  std::map<int, Row> by_degree;
  for (const auto& [s, c] : a.terms()) by_degree[s.size()][s] = c;
  const std::vector<ElementSet> cs = circuits(m);
  for (auto& [k, target] : by_degree) {
    Span span;
    for (ElementSet c : cs) {
      const int extra = k - (c.size() - 1);
      if (extra < 0) continue;
      const ExteriorElement bc = boundary(ExteriorElement::monomial(c));
      for_each_k_subset(m.ground_set(), extra, [&](ElementSet t) {
        const ExteriorElement g = oracle::wedge(bc, ExteriorElement::monomial(t));
        Row row(g.terms().begin(), g.terms().end());
        span.insert(std::move(row));
      });
    }
    if (!span.reduce(target).empty()) return false;
  }
  return true;
}

Matroid graphic(const Graph& g) {
  // A set of edges is independent iff no subset of it forms a cycle; test by
  // repeatedly deleting leaves (degree-1 vertices) until none remain.
  const int n = static_cast<int>(g.edges.size());
  auto acyclic = [&](ElementSet s) {
    std::vector<std::pair<int, int>> edges;
    for (int e : s.labels()) edges.push_back(g.edges[e - 1]);
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> degree(static_cast<std::size_t>(g.vertex_count) + 1, 0);
      for (const auto& [u, v] : edges) {
        ++degree[u];
        ++degree[v];
      }
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [u, v] = edges[i];
        if (u != v && (degree[u] == 1 || degree[v] == 1)) {
          edges.erase(edges.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      }
    }
    return edges.empty();
  };
  std::vector<ElementSet> independent;
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const ElementSet s(mask);
    if (!acyclic(s)) continue;
    if (s.size() > best) {
      best = s.size();
      independent.clear();
    }
    if (s.size() == best) independent.push_back(s);
  }
  return Matroid::from_valid_bases(n, independent);
}

}  // namespace matroid::oracle
