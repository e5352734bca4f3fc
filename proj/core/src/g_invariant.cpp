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

#include "matroid/g_invariant.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <type_traits>
#include <unordered_map>

#include "matroid/errors.hpp"

namespace matroid {

RankSequence RankSequence::parse(const std::string& bits) {
  if (bits.size() > 64) throw InputError("rank sequence longer than 64 positions");
  RankSequence s{static_cast<int>(bits.size()), 0};
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      s.mask |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw InputError("rank sequence '" + bits + "' has a character other than 0 or 1");
    }
  }
  return s;
}

RankSequence RankSequence::leading_ones(int n, int r) {
  return {n, ElementSet::range(r).mask()};
}

RankSequence RankSequence::with_ones(int n, ElementSet positions) {
  if (!ElementSet::range(n).contains(positions))
    throw InputError("rank sequence positions " + positions.to_string() + " exceed length " +
                     std::to_string(n));
  return {n, positions.mask()};
}

int RankSequence::prefix_weight(int length) const {
  return (ElementSet(mask) & ElementSet::range(length)).size();
}

std::string RankSequence::to_string() const {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if (bit(i + 1)) out[static_cast<std::size_t>(i)] = '1';
  return out;
}

std::vector<RankSequence> rank_sequences(int n, int r) {
  std::vector<RankSequence> out;
  for_each_k_subset(ElementSet::range(n), r, [&](ElementSet s) { out.push_back({n, s.mask()}); });
  std::sort(out.begin(), out.end());
  return out;
}

SymbolVector parse_symbol_vector(const std::string& text) {
  SymbolVector v;
  bool have_shape = false;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) ++i;
  };
  skip_space();
  if (i == text.size()) throw InputError("empty symbol vector");
  bool first = true;
  while (i < text.size()) {
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_space();
    } else if (!first) {
      throw InputError("expected '+' or '-' at position " + std::to_string(i) + " in '" + text + "'");
    }
    first = false;
    Rational coeff = 1;
    const std::size_t bracket = text.find('[', i);
    if (bracket == std::string::npos)
      throw InputError("expected '[' after position " + std::to_string(i) + " in '" + text + "'");
    std::string prefix = text.substr(i, bracket - i);
    prefix.erase(std::remove_if(prefix.begin(), prefix.end(),
                                [](unsigned char c) { return std::isspace(c) != 0 || c == '*'; }),
                 prefix.end());
    if (!prefix.empty()) coeff = parse_rational(prefix);
    const std::size_t close = text.find(']', bracket);
    if (close == std::string::npos) throw InputError("unterminated '[' in '" + text + "'");
    const RankSequence s = RankSequence::parse(text.substr(bracket + 1, close - bracket - 1));
    if (!have_shape) {
      v.n = s.n;
      v.r = s.ones();
      have_shape = true;
    } else if (s.n != v.n || s.ones() != v.r) {
      throw InputError("symbol [" + s.to_string() + "] does not match length " +
                       std::to_string(v.n) + " with " + std::to_string(v.r) + " ones");
    }
    v.add(s, sign * coeff);
    i = close + 1;
    skip_space();
  }
  return v;
}

RankSequence rank_sequence(const Matroid& m, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != m.size())
    throw InputError("permutation has length " + std::to_string(perm.size()) + ", expected " +
                     std::to_string(m.size()));
  RankSequence s{m.size(), 0};
  ElementSet prefix;
  int previous = 0;
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (perm[j] < 1 || perm[j] > m.size() || prefix.contains(perm[j]))
      throw InputError("not a permutation of 1.." + std::to_string(m.size()));
    prefix = prefix.with(perm[j]);
    const int current = m.rank(prefix);
    if (current > previous) s.mask |= std::uint64_t{1} << j;
    previous = current;
  }
  return s;
}

namespace {

GInvariant by_permutations(const Matroid& m) {
  if (m.size() > kGPermutationGuard)
    throw GuardError("the permutation method needs n <= " + std::to_string(kGPermutationGuard) +
                     "; use chain-dp");
  std::vector<int> perm(static_cast<std::size_t>(m.size()));
  std::iota(perm.begin(), perm.end(), 1);
  std::map<std::uint64_t, std::uint64_t> counts;
  do {
    ++counts[rank_sequence(m, perm).mask];
  } while (std::next_permutation(perm.begin(), perm.end()));
  GInvariant g{m.size(), m.rank(), {}};
  for (const auto& [mask, c] : counts)
    g.add({m.size(), mask}, Integer(static_cast<unsigned long>(c)));
  return g;
}

// Counts maximal chains of subsets by their rank increments. The frontier
// for size j maps each j-subset to (prefix sequence -> number of chains).
GInvariant by_chains(const Matroid& m) {
  if (m.size() > kSubsetGuard)
    throw GuardError("chain-dp needs n <= " + std::to_string(kSubsetGuard));
  const int n = m.size();
  using Prefixes = std::unordered_map<std::uint64_t, std::uint64_t>;
  std::unordered_map<std::uint64_t, Prefixes> frontier;
  frontier[0][0] = 1;
  for (int j = 0; j < n; ++j) {
    std::unordered_map<std::uint64_t, Prefixes> next;
    for (const auto& [subset, prefixes] : frontier) {
      const int base = m.rank(ElementSet(subset));
      for (int bit = 0; bit < n; ++bit) {
        const std::uint64_t grown = subset | (std::uint64_t{1} << bit);
        if (grown == subset) continue;
        const bool up = m.rank(ElementSet(grown)) > base;
        Prefixes& target = next[grown];
        for (const auto& [prefix, count] : prefixes)
          target[up ? prefix | (std::uint64_t{1} << j) : prefix] += count;
      }
    }
    frontier = std::move(next);
  }
  GInvariant g{n, m.rank(), {}};
  for (const auto& [subset, prefixes] : frontier)
    for (const auto& [prefix, count] : prefixes)
      g.add({n, prefix}, Integer(static_cast<unsigned long>(count)));
  return g;
}

void check_paving_shape(int n, int r) {
  if (n < 0 || n > kMaxLabel) throw InputError("n outside 0.." + std::to_string(kMaxLabel));
  if (r < 1 || r > n) throw InputError("paving closed forms need 1 <= r <= n");
}

template <class Coeff>
Polynomial<2, Coeff> specialize(const SymbolCombination<Coeff>& v, bool shifted) {
  using Poly = Polynomial<2, Rational>;
  const Poly one = Poly::constant(Rational(1));
  const Poly x = shifted ? Poly::variable(0) - one : Poly::variable(0);
  const Poly y = shifted ? Poly::variable(1) - one : Poly::variable(1);
  std::vector<Rational> weights;
  for (int m = 0; m <= v.n; ++m)
    weights.push_back(make_rational(1, factorial(m) * factorial(v.n - m)));
  Poly total;
  for (const auto& [s, c] : v.coefficients) {
    Poly image;
    for (int m = 0; m <= v.n; ++m) {
      const int wt = s.prefix_weight(m);
      image += x.pow(static_cast<unsigned>(v.r - wt)) * y.pow(static_cast<unsigned>(m - wt)) *
               weights[static_cast<std::size_t>(m)];
    }
    total += image * Rational(c);
  }
  if constexpr (std::is_same_v<Coeff, Rational>) {
    return total;
  } else {
    return to_integer_polynomial(total, "specialization of a G-invariant");
  }
}

}  // namespace

GInvariant g_invariant(const Matroid& m, GMethod method) {
  return method == GMethod::kPermutations ? by_permutations(m) : by_chains(m);
}

GInvariant g_dual(const GInvariant& g) {
  GInvariant out{g.n, g.n - g.r, {}};
  for (const auto& [s, c] : g.coefficients) {
    std::uint64_t mask = 0;
    for (int i = 1; i <= g.n; ++i)
      if (!s.bit(i)) mask |= std::uint64_t{1} << (g.n - i);
    out.add({g.n, mask}, c);
  }
  return out;
}

GInvariant paving_g(int n, int r, std::span<const int> copoint_sizes) {
  check_paving_shape(n, r);
  GInvariant g{n, r, {}};
  Integer trivial = binomial(n, r - 1);
  for (int size : copoint_sizes) {
    if (size < r || size >= n)
      throw InputError("non-trivial copoint size " + std::to_string(size) + " outside " +
                       std::to_string(r) + ".." + std::to_string(n - 1));
    trivial -= binomial(size, r - 1);
  }
  if (trivial < 0)
    throw InputError("copoint sizes cover more (r-1)-subsets than exist; not a paving matroid");
  g.add(RankSequence::leading_ones(n, r), trivial * factorial(r - 1) * factorial(n - r + 1));
  for (int size : copoint_sizes) {
    for (int i = r; i <= size + 1; ++i) {
      const Integer c = factorial(size) / factorial(size - i + 1) * (n - size) * factorial(n - i);
      const ElementSet ones = ElementSet::range(r - 1).with(i);
      g.add(RankSequence::with_ones(n, ones), c);
    }
  }
  return g;
}

GInvariant paving_g(int n, int r, std::span<const ElementSet> copoints) {
  paving_matroid(n, r, copoints);  // validates the copoint family
  std::vector<int> sizes;
  for (ElementSet x : copoints) sizes.push_back(x.size());
  return paving_g(n, r, std::span<const int>(sizes));
}

GInvariant sparse_paving_g(int n, int r, int alpha) {
  check_paving_shape(n, r);
  if (alpha < 0 || Integer(alpha) > binomial(n, r))
    throw InputError("alpha outside 0..C(n,r)");
  const Integer unit = factorial(r) * factorial(n - r);
  GInvariant g{n, r, {}};
  g.add(RankSequence::leading_ones(n, r), (binomial(n, r) - alpha) * unit);
  if (alpha > 0) {
    if (r == n) throw InputError("a sparse paving matroid with r = n has no non-trivial copoints");
    g.add(RankSequence::with_ones(n, ElementSet::range(r - 1).with(r + 1)), Integer(alpha) * unit);
  }
  return g;
}

RationalBivariate specialize_to_tutte(const SymbolVector& v) { return specialize(v, true); }

BivariatePolynomial specialize_to_tutte(const GInvariant& g) { return specialize(g, true); }

BivariatePolynomial specialize_to_corank_nullity(const GInvariant& g) {
  return specialize(g, false);
}

SymbolVector to_symbol_vector(const GInvariant& g) {
  SymbolVector v{g.n, g.r, {}};
  for (const auto& [s, c] : g.coefficients) v.add(s, Rational(c));
  return v;
}

}  // namespace matroid
