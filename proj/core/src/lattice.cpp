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

#include "matroid/errors.hpp"
#include "matroid/matroid.hpp"

namespace matroid {

FlatLattice flat_lattice(const Matroid& m) {
  const int n = m.size();
  if (n > kSubsetGuard)
    throw GuardError("flat enumeration needs n <= " + std::to_string(kSubsetGuard));
  FlatLattice lattice;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < count; ++s) {
    const ElementSet set(s);
    const int rs = m.rank(set);
    bool closed = true;
    for (int e = 1; e <= n && closed; ++e)
      if (!set.contains(e) && m.rank(set.with(e)) == rs) closed = false;
    if (closed) lattice.flats.push_back(Flat{set, rs, 0});
  }
  std::sort(lattice.flats.begin(), lattice.flats.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : glex_less(a.set, b.set);
  });
  // The unique rank-0 flat cl({}) comes first; every other flat contains it.
  for (std::size_t i = 0; i < lattice.flats.size(); ++i) {
    Flat& x = lattice.flats[i];
    if (i == 0) {
      x.mobius = 1;
      continue;
    }
    Integer sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const Flat& y = lattice.flats[j];
      if (y.rank < x.rank && x.set.contains(y.set)) sum += y.mobius;
    }
    x.mobius = -sum;
  }
  return lattice;
}

}  // namespace matroid
