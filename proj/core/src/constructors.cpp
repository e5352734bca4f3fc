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

#include <algorithm>
#include <numeric>

#include "matroid/errors.hpp"
#include "matroid/matroid.hpp"

namespace matroid {

namespace {

void check_ground_size(int n) {
  if (n < 0 || n > kMaxLabel)
    throw InputError("ground set size " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxLabel));
}

/// Returns a description of an exchange-axiom violation, or an empty string.
std::string find_exchange_violation(const std::vector<ElementSet>& bases) {
  for (ElementSet b1 : bases) {
    for (ElementSet b2 : bases) {
      if (b1 == b2) continue;
      const ElementSet only_b1 = b1 - b2;
      const ElementSet only_b2 = b2 - b1;
      std::string failure;
      only_b1.for_each([&](int x) {
        if (!failure.empty()) return;
        bool found = false;
        only_b2.for_each([&](int y) {
          if (!found)
            found = std::binary_search(bases.begin(), bases.end(), b1.without(x).with(y));
        });
        if (!found)
          failure = "basis exchange fails for B1=" + b1.to_string() + ", B2=" + b2.to_string() +
                    ", x=" + std::to_string(x);
      });
      if (!failure.empty()) return failure;
    }
  }
  return {};
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void check_graph(const Graph& g) {
  if (g.vertex_count < 0) throw InputError("negative vertex count");
  if (static_cast<int>(g.edges.size()) > kMaxLabel)
    throw InputError("graph has more than " + std::to_string(kMaxLabel) + " edges");
  for (const auto& [u, v] : g.edges)
    if (u < 1 || v < 1 || u > g.vertex_count || v > g.vertex_count)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 1.." + std::to_string(g.vertex_count));
}

}  // namespace

Matroid from_bases(int n, std::vector<ElementSet> bases) {
  check_ground_size(n);
  if (bases.empty()) throw InputError("a matroid needs at least one basis");
  const ElementSet ground = ElementSet::range(n);
  for (ElementSet b : bases)
    if (!ground.contains(b))
      throw InputError("basis " + b.to_string() + " is not a subset of 1.." + std::to_string(n));
  for (ElementSet b : bases)
    if (b.size() != bases.front().size())
      throw InputError("bases have unequal cardinalities: " + bases.front().to_string() + " has " +
                       std::to_string(bases.front().size()) + " elements, " + b.to_string() +
                       " has " + std::to_string(b.size()));
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (std::string why = find_exchange_violation(bases); !why.empty()) throw InputError(why);
  return Matroid::from_valid_bases(n, std::move(bases));
}

Matroid from_circuits(int n, std::span<const ElementSet> circuits, std::optional<int> rank) {
  check_ground_size(n);
  if (n > kSubsetGuard)
    throw GuardError("from_circuits needs n <= " + std::to_string(kSubsetGuard));
  const ElementSet ground = ElementSet::range(n);
  for (ElementSet c : circuits) {
    if (c.empty()) throw InputError("the empty set cannot be a circuit");
    if (!ground.contains(c))
      throw InputError("circuit " + c.to_string() + " is not a subset of 1.." + std::to_string(n));
  }
  if (rank && (*rank < 0 || *rank > n))
    throw InputError("rank " + std::to_string(*rank) + " outside 0.." + std::to_string(n));

  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint8_t> independent(count, 0);
  for (std::uint64_t s = 0; s < count; ++s) {
    const ElementSet set(s);
    if (rank && set.size() > *rank) continue;
    independent[s] = std::none_of(circuits.begin(), circuits.end(),
                                  [set](ElementSet c) { return set.contains(c); });
  }
  std::vector<ElementSet> maximal;
  for (std::uint64_t s = 0; s < count; ++s) {
    if (independent[s] == 0) continue;
    bool is_max = true;
    for (int bit = 0; bit < n && is_max; ++bit) {
      const std::uint64_t up = s | (std::uint64_t{1} << bit);
      if (up != s && independent[up] != 0) is_max = false;
    }
    if (is_max) maximal.emplace_back(s);
  }
  for (ElementSet b : maximal)
    if (b.size() != maximal.front().size())
      throw InputError("not a circuit family: maximal independent sets " +
                       maximal.front().to_string() + " and " + b.to_string() +
                       " have different sizes");
  if (rank && maximal.front().size() != *rank)
    throw InputError("circuits allow rank at most " + std::to_string(maximal.front().size()) +
                     ", but rank " + std::to_string(*rank) + " was requested");
  if (std::string why = find_exchange_violation(maximal); !why.empty())
    throw InputError("not a circuit family: " + why);
  Matroid m = Matroid::from_valid_bases(n, std::move(maximal));
  for (ElementSet c : circuits) {
    bool minimal_dependent = !m.is_independent(c);
    c.for_each([&](int e) {
      if (minimal_dependent && !m.is_independent(c.without(e))) minimal_dependent = false;
    });
    if (!minimal_dependent)
      throw InputError("listed set " + c.to_string() + " is not a circuit of the resulting matroid");
  }
  return m;
}

Matroid uniform_matroid(int r, int n) {
  check_ground_size(n);
  if (r < 0 || r > n)
    throw InputError("uniform matroid needs 0 <= r <= n, got r=" + std::to_string(r) +
                     ", n=" + std::to_string(n));
  std::vector<ElementSet> bases;
  for_each_k_subset(ElementSet::range(n), r, [&](ElementSet s) { bases.push_back(s); });
  return Matroid::from_valid_bases(n, std::move(bases));
}

Matroid paving_matroid(int n, int r, std::span<const ElementSet> copoints) {
  check_ground_size(n);
  if (r < 1 || r > n) throw InputError("paving matroid needs 1 <= r <= n");
  const ElementSet ground = ElementSet::range(n);
  for (std::size_t i = 0; i < copoints.size(); ++i) {
    const ElementSet x = copoints[i];
    if (!ground.contains(x))
      throw InputError("copoint " + x.to_string() + " is not a subset of 1.." + std::to_string(n));
    if (x.size() < r)
      throw InputError("non-trivial copoint " + x.to_string() + " has fewer than r=" +
                       std::to_string(r) + " elements");
    if (x == ground) throw InputError("a copoint cannot be the whole ground set");
    for (std::size_t j = i + 1; j < copoints.size(); ++j)
      if ((x & copoints[j]).size() > r - 2)
        throw InputError("copoints " + x.to_string() + " and " + copoints[j].to_string() +
                         " meet in at least r-1 elements; not a paving matroid");
  }
  std::vector<ElementSet> bases;
  for_each_k_subset(ground, r, [&](ElementSet s) {
    if (std::none_of(copoints.begin(), copoints.end(), [s](ElementSet x) { return x.contains(s); }))
      bases.push_back(s);
  });
  if (bases.empty()) throw InputError("copoints cover every r-subset; no bases remain");
  return Matroid::from_valid_bases(n, std::move(bases));
}

int connected_components(const Graph& g) {
  check_graph(g);
  DisjointSets sets(g.vertex_count);
  int components = g.vertex_count;
  for (const auto& [u, v] : g.edges)
    if (sets.unite(u - 1, v - 1)) --components;
  return components;
}

Matroid from_graph(const Graph& g) {
  check_graph(g);
  const int n = static_cast<int>(g.edges.size());
  const int r = g.vertex_count - connected_components(g);
  std::vector<ElementSet> bases;
  for_each_k_subset(ElementSet::range(n), r, [&](ElementSet s) {
    DisjointSets sets(g.vertex_count);
    bool forest = true;
    s.for_each([&](int e) {
      const auto& [u, v] = g.edges[e - 1];
      if (forest && !sets.unite(u - 1, v - 1)) forest = false;
    });
    if (forest) bases.push_back(s);
  });
  return Matroid::from_valid_bases(n, std::move(bases));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  check_graph(g);
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count) + 1, 0);
  int next = 0;
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  for (int v : sorted) {
    if (v < 1 || v > g.vertex_count) throw InputError("vertex outside the graph");
    index[v] = ++next;
  }
  Graph out{next, {}};
  for (const auto& [u, v] : g.edges)
    if (index[u] != 0 && index[v] != 0) out.edges.emplace_back(index[u], index[v]);
  return out;
}

}  // namespace matroid
