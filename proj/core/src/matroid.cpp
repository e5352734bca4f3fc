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

#include "matroid/matroid.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "matroid/errors.hpp"

namespace matroid {

namespace detail {

struct MatroidCache {
  std::once_flag rank_once;
  std::vector<std::uint8_t> rank;
  std::once_flag circuits_once;
  std::vector<ElementSet> circuits;
};

}  // namespace detail

namespace {

void normalize(std::vector<ElementSet>& bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
}

}  // namespace

Matroid::Matroid() : Matroid(0, 0, {ElementSet{}}) {}

Matroid::Matroid(int n, int r, std::vector<ElementSet> bases)
    : n_(n), r_(r), bases_(std::move(bases)), cache_(std::make_shared<detail::MatroidCache>()) {}

Matroid Matroid::from_valid_bases(int n, std::vector<ElementSet> bases) {
  normalize(bases);
  if (bases.empty()) throw InputError("a matroid needs at least one basis");
  const int r = bases.front().size();
  return Matroid(n, r, std::move(bases));
}

bool Matroid::is_basis(ElementSet s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

const std::vector<std::uint8_t>* Matroid::rank_table() const {
  if (n_ > kSubsetGuard) return nullptr;
  std::call_once(cache_->rank_once, [this] {
    const std::uint64_t count = std::uint64_t{1} << n_;
    std::vector<std::uint8_t> independent(count, 0);
    for (ElementSet b : bases_) independent[b.mask()] = 1;
    // Supersets have larger masks, so a descending sweep sees them first.
    for (std::uint64_t s = count; s-- > 0;) {
      if (independent[s] != 0) continue;
      if (std::popcount(s) >= r_) continue;
      for (int bit = 0; bit < n_; ++bit) {
        const std::uint64_t up = s | (std::uint64_t{1} << bit);
        if (up != s && independent[up] != 0) {
          independent[s] = 1;
          break;
        }
      }
    }
    std::vector<std::uint8_t> rank(count, 0);
    for (std::uint64_t s = 0; s < count; ++s) {
      if (independent[s] != 0) {
        rank[s] = static_cast<std::uint8_t>(std::popcount(s));
        continue;
      }
      std::uint8_t best = 0;
      for (std::uint64_t m = s; m != 0; m &= m - 1) {
        const std::uint64_t down = s & ~(m & (~m + 1));
        best = std::max(best, rank[down]);
      }
      rank[s] = best;
    }
    cache_->rank = std::move(rank);
  });
  return &cache_->rank;
}

int Matroid::rank(ElementSet s) const {
  s &= ground_set();
  if (const auto* table = rank_table()) return (*table)[s.mask()];
  int best = 0;
  for (ElementSet b : bases_) best = std::max(best, (b & s).size());
  return best;
}

ElementSet Matroid::closure(ElementSet s) const {
  s &= ground_set();
  const int rs = rank(s);
  ElementSet out = s;
  for (int e = 1; e <= n_; ++e)
    if (!s.contains(e) && rank(s.with(e)) == rs) out = out.with(e);
  return out;
}

bool Matroid::is_loop(int e) const {
  return std::none_of(bases_.begin(), bases_.end(), [e](ElementSet b) { return b.contains(e); });
}

bool Matroid::is_coloop(int e) const {
  return std::all_of(bases_.begin(), bases_.end(), [e](ElementSet b) { return b.contains(e); });
}

ElementSet Matroid::loops() const {
  ElementSet in_some;
  for (ElementSet b : bases_) in_some |= b;
  return ground_set() - in_some;
}

ElementSet Matroid::coloops() const {
  ElementSet in_all = ground_set();
  for (ElementSet b : bases_) in_all &= b;
  return in_all;
}

bool Matroid::is_simple() const {
  if (!loops().empty()) return false;
  for (int e = 1; e <= n_; ++e)
    for (int f = e + 1; f <= n_; ++f)
      if (rank(ElementSet{e, f}) < 2) return false;
  return true;
}

const std::vector<ElementSet>& Matroid::circuits() const {
  std::call_once(cache_->circuits_once, [this] {
    if (n_ > kSubsetGuard)
      throw GuardError("circuit enumeration needs n <= " + std::to_string(kSubsetGuard));
    std::vector<ElementSet> out;
    const std::uint64_t count = std::uint64_t{1} << n_;
    for (std::uint64_t s = 1; s < count; ++s) {
      const ElementSet set(s);
      if (is_independent(set)) continue;
      bool minimal = true;
      for (std::uint64_t m = s; m != 0 && minimal; m &= m - 1)
        minimal = is_independent(ElementSet(s & ~(m & (~m + 1))));
      if (minimal) out.push_back(set);
    }
    std::sort(out.begin(), out.end(), GlexLess{});
    cache_->circuits = std::move(out);
  });
  return cache_->circuits;
}

const Flat* FlatLattice::find(ElementSet set) const {
  for (const Flat& f : flats)
    if (f.set == set) return &f;
  return nullptr;
}

Matroid dual(const Matroid& m) {
  std::vector<ElementSet> bases;
  bases.reserve(m.basis_count());
  for (ElementSet b : m.bases()) bases.push_back(m.ground_set() - b);
  return Matroid::from_valid_bases(m.size(), std::move(bases));
}

namespace {

/// Maps the labels of `kept` (in increasing order) onto 1..|kept|.
ElementSet compress(ElementSet s, ElementSet kept) {
  std::uint64_t out = 0;
  int next = 0;
  kept.for_each([&](int e) {
    if (s.contains(e)) out |= std::uint64_t{1} << next;
    ++next;
  });
  return ElementSet(out);
}

}  // namespace

LabeledMatroid minor(const Matroid& m, ElementSet del, ElementSet contract) {
  del &= m.ground_set();
  contract &= m.ground_set();
  if (!(del & contract).empty())
    throw InputError("deletion and contraction sets must be disjoint, both contain " +
                     (del & contract).to_string());
  ElementSet independent_part;
  int best = -1;
  for (ElementSet b : m.bases()) {
    const int k = (b & contract).size();
    if (k > best) {
      best = k;
      independent_part = b & contract;
    }
  }
  const ElementSet kept = m.ground_set() - del - contract;
  std::vector<ElementSet> candidates;
  int top = -1;
  for (ElementSet b : m.bases()) {
    if (!b.contains(independent_part)) continue;
    const ElementSet rest = b & kept;
    if (rest.size() > top) {
      top = rest.size();
      candidates.clear();
    }
    if (rest.size() == top) candidates.push_back(compress(rest, kept));
  }
  LabeledMatroid out{Matroid::from_valid_bases(kept.size(), std::move(candidates)), kept.labels()};
  return out;
}

LabeledMatroid restriction(const Matroid& m, ElementSet a) {
  return minor(m, m.ground_set() - a, ElementSet{});
}

LabeledMatroid contraction(const Matroid& m, ElementSet a) { return minor(m, ElementSet{}, a); }

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.size() + b.size() > kMaxLabel)
    throw InputError("direct sum exceeds " + std::to_string(kMaxLabel) + " elements");
  std::vector<ElementSet> bases;
  bases.reserve(a.basis_count() * b.basis_count());
  for (ElementSet x : a.bases())
    for (ElementSet y : b.bases()) bases.push_back(x | ElementSet(y.mask() << a.size()));
  return Matroid::from_valid_bases(a.size() + b.size(), std::move(bases));
}

LabeledMatroid simplify(const Matroid& m) {
  const ElementSet loops = m.loops();
  ElementSet assigned = loops;
  ElementSet kept;
  for (int e = 1; e <= m.size(); ++e) {
    if (assigned.contains(e)) continue;
    kept = kept.with(e);
    for (int f = e; f <= m.size(); ++f)
      if (!assigned.contains(f) && m.rank(ElementSet{e, f}) == 1) assigned = assigned.with(f);
  }
  return restriction(m, kept);
}

Matroid relabel(const Matroid& m, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != m.size()) throw InputError("permutation has wrong length");
  std::uint64_t seen = 0;
  for (int p : perm) {
    if (p < 1 || p > m.size()) throw InputError("permutation entry out of range");
    seen |= std::uint64_t{1} << (p - 1);
  }
  if (ElementSet(seen) != m.ground_set()) throw InputError("relabeling is not a permutation");
  std::vector<ElementSet> bases;
  bases.reserve(m.basis_count());
  for (ElementSet b : m.bases()) {
    std::uint64_t out = 0;
    b.for_each([&](int e) { out |= std::uint64_t{1} << (perm[e - 1] - 1); });
    bases.emplace_back(out);
  }
  return Matroid::from_valid_bases(m.size(), std::move(bases));
}

std::vector<std::vector<int>> base_polytope_vertices(const Matroid& m) {
  std::vector<std::vector<int>> out;
  out.reserve(m.basis_count());
  for (ElementSet b : m.bases()) {
    std::vector<int> v(m.size(), 0);
    b.for_each([&](int e) { v[e - 1] = 1; });
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace matroid
