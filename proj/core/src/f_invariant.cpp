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

#include "matroid/f_invariant.hpp"

#include <limits>

#include "matroid/errors.hpp"

namespace matroid {

namespace {

bool generic(const Matroid& m, std::span<const int> f) {
  long best = std::numeric_limits<long>::max();
  int attained = 0;
  for (ElementSet b : m.bases()) {
    long weight = 0;
    b.for_each([&](int e) { weight += f[static_cast<std::size_t>(e - 1)]; });
    if (weight < best) {
      best = weight;
      attained = 1;
    } else if (weight == best) {
      ++attained;
    }
  }
  return attained == 1;
}

}  // namespace

bool is_m_generic(const Matroid& m, std::span<const int> f) {
  if (static_cast<int>(f.size()) != m.size())
    throw InputError("f has " + std::to_string(f.size()) + " values, expected " +
                     std::to_string(m.size()));
  for (int v : f)
    if (v < 1) throw InputError("f must take positive integer values");
  return generic(m, f);
}

std::map<ValueCounts, std::uint64_t> f_invariant_truncated(const Matroid& m, int k,
                                                           std::uint64_t guard) {
  if (k < 1) throw InputError("max value must be at least 1");
  std::uint64_t total = 1;
  for (int i = 0; i < m.size(); ++i) {
    if (total > guard / static_cast<std::uint64_t>(k))
      throw GuardError("k^n exceeds the enumeration guard " + std::to_string(guard));
    total *= static_cast<std::uint64_t>(k);
  }
  std::map<ValueCounts, std::uint64_t> out;
  std::vector<int> f(static_cast<std::size_t>(m.size()), 1);
  for (std::uint64_t step = 0; step < total; ++step) {
    if (generic(m, f)) {
      ValueCounts counts(static_cast<std::size_t>(k), 0);
      for (int v : f) ++counts[static_cast<std::size_t>(v - 1)];
      ++out[counts];
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] < k) {
        ++f[i];
        break;
      }
      f[i] = 1;
    }
  }
  return out;
}

}  // namespace matroid
