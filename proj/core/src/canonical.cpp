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
#include <map>
#include <sstream>

#include "matroid/errors.hpp"
#include "matroid/matroid.hpp"

namespace matroid {

namespace {

using Signature = std::vector<std::size_t>;

/// Per-element isomorphism invariant: the number of bases containing the
/// element, followed by the sorted numbers of bases containing it together
/// with each other element.
std::vector<Signature> element_signatures(const Matroid& m) {
  const int n = m.size();
  std::vector<std::vector<std::size_t>> together(n, std::vector<std::size_t>(n, 0));
  for (ElementSet b : m.bases())
    b.for_each([&](int e) { b.for_each([&](int f) { ++together[e - 1][f - 1]; }); });
  std::vector<Signature> out(n);
  for (int e = 0; e < n; ++e) {
    Signature pairs;
    for (int f = 0; f < n; ++f)
      if (f != e) pairs.push_back(together[e][f]);
    std::sort(pairs.begin(), pairs.end());
    out[e].push_back(together[e][e]);
    out[e].insert(out[e].end(), pairs.begin(), pairs.end());
  }
  return out;
}

std::vector<ElementSet> image(const std::vector<ElementSet>& bases, const std::vector<int>& to) {
  std::vector<ElementSet> out;
  out.reserve(bases.size());
  for (ElementSet b : bases) {
    std::uint64_t mask = 0;
    b.for_each([&](int e) { mask |= std::uint64_t{1} << (to[e - 1] - 1); });
    out.emplace_back(mask);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string encode(int n, int r, const std::vector<ElementSet>& bases) {
  std::ostringstream os;
  os << n << ':' << r << ':' << std::hex;
  for (std::size_t i = 0; i < bases.size(); ++i) os << (i == 0 ? "" : ",") << bases[i].mask();
  return os.str();
}

}  // namespace

std::string canonical_key(const Matroid& m, int exact_guard) {
  const int n = m.size();
  const std::vector<Signature> sigs = element_signatures(m);
  if (n > exact_guard) {
    std::vector<Signature> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    os << "~" << n << ':' << m.rank() << ':' << m.basis_count();
    for (const Signature& s : sorted) {
      os << '|';
      for (std::size_t v : s) os << v << '.';
    }
    return os.str();
  }

  // Elements are grouped into classes of equal signature; classes receive
  // consecutive new labels in signature order and only permutations inside
  // classes are searched.
  std::map<Signature, std::vector<int>> by_signature;
  for (int e = 1; e <= n; ++e) by_signature[sigs[e - 1]].push_back(e);
  std::vector<std::vector<int>> classes;
  for (auto& [sig, members] : by_signature) classes.push_back(members);

  // A class whose adjacent transpositions all preserve the basis family is
  // fully symmetric, so a single arrangement of it suffices.
  std::vector<bool> symmetric(classes.size(), false);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    bool all = true;
    for (std::size_t i = 0; i + 1 < classes[c].size() && all; ++i) {
      std::vector<int> swap(n);
      for (int e = 1; e <= n; ++e) swap[e - 1] = e;
      std::swap(swap[classes[c][i] - 1], swap[classes[c][i + 1] - 1]);
      all = image(m.bases(), swap) == m.bases();
    }
    symmetric[c] = all;
  }

  std::vector<ElementSet> best;
  bool have_best = false;
  std::vector<int> to(n);
  auto visit = [&] {
    int next = 1;
    for (const auto& cls : classes)
      for (int e : cls) to[e - 1] = next++;
    std::vector<ElementSet> candidate = image(m.bases(), to);
    if (!have_best || candidate < best) {
      best = std::move(candidate);
      have_best = true;
    }
  };
  // Odometer over next_permutation of each non-symmetric class.
  while (true) {
    visit();
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      if (symmetric[c]) continue;
      if (std::next_permutation(classes[c].begin(), classes[c].end())) break;
    }
    if (c == classes.size()) break;
  }
  return encode(n, m.rank(), best);
}

bool is_exact_key(const std::string& key) { return key.empty() || key.front() != '~'; }

}  // namespace matroid
