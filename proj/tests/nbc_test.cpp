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
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "matroid/errors.hpp"
#include "matroid/nbc.hpp"
#include "oracles.hpp"

namespace matroid {
namespace {

using testing::k_matroid;

std::vector<ElementSet> sets(std::initializer_list<std::initializer_list<int>> items) {
  std::vector<ElementSet> out;
  for (auto i : items) out.emplace_back(i);
  std::sort(out.begin(), out.end(), GlexLess{});
  return out;
}

TEST(BrokenCircuits, K) {
  EXPECT_EQ(broken_circuits(k_matroid()),
            sets({{2, 3}, {5, 6}, {4, 6}, {4, 5}, {2, 4, 5}, {3, 4, 6}, {3, 5, 6}}));
  EXPECT_EQ(k_matroid().circuits(),
            sets({{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}, {1, 2, 4, 5}, {1, 3, 4, 6}, {2, 3, 5, 6}}));
}

TEST(BrokenCircuits, UniformAndFree) {
  std::vector<ElementSet> expected;
  for_each_k_subset(ElementSet{2, 3, 4, 5}, 2, [&](ElementSet s) { expected.push_back(s); });
  std::sort(expected.begin(), expected.end(), GlexLess{});
  EXPECT_EQ(broken_circuits(uniform_matroid(2, 5)), expected);
  EXPECT_TRUE(broken_circuits(uniform_matroid(3, 3)).empty());
}

TEST(BrokenCircuits, RejectsLoops) {
  EXPECT_THROW(broken_circuits(uniform_matroid(0, 1)), InputError);
  EXPECT_THROW(nbc_sets(uniform_matroid(0, 1)), InputError);
}

TEST(NbcSets, K) {
  const NbcCatalog c = nbc_sets(k_matroid());
  EXPECT_EQ(c.of_size(3), sets({{1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 3, 6}}));
  EXPECT_EQ(c.of_size(2), sets({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6},
                                {3, 4}, {3, 5}, {3, 6}}));
  EXPECT_EQ(c.whitney_numbers(), (std::vector<Integer>{1, 6, 11, 6}));
  for (ElementSet s : c.of_size(3)) EXPECT_TRUE(s.contains(1));
  EXPECT_EQ(c.by_flat.at(ElementSet{1, 2, 3}), sets({{1, 2}, {1, 3}}));
}

TEST(NbcSets, IndependentAndAvoidBrokenCircuits) {
  for (const auto& [name, m] : testing::corpus()) {
    if (!m.loops().empty()) continue;
    const auto broken = broken_circuits(m);
    const NbcCatalog c = nbc_sets(m);
    for (const auto& [flat, list] : c.by_flat)
      for (ElementSet s : list) {
        EXPECT_EQ(oracle::rank(m, s), s.size()) << name;
        EXPECT_EQ(m.closure(s), flat);
        for (ElementSet b : broken) EXPECT_FALSE(s.contains(b));
      }
  }
}

TEST(NbcSets, WhitneyNumbersAreRelabelingInvariant) {
  std::mt19937_64 rng(11);
  for (const auto& [name, m] : testing::corpus()) {
    if (!m.loops().empty()) continue;
    const auto w = nbc_sets(m).whitney_numbers();
    std::vector<int> perm(static_cast<std::size_t>(m.size()));
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = 0; i < 5; ++i) {
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(nbc_sets(relabel(m, perm)).whitney_numbers(), w) << name;
    }
  }
}

TEST(CharPoly, Examples) {
  const auto l = [](std::initializer_list<int> coeffs) {
    UnivariatePolynomial p;
    int d = static_cast<int>(coeffs.size()) - 1;
    for (int c : coeffs) p.add_term({d--}, Integer(c));
    return p;
  };
  EXPECT_EQ(char_poly(k_matroid()).value, l({1, -6, 11, -6}));
  EXPECT_EQ(char_poly(testing::m1()).value, l({1, -6, 13, -8}));
  EXPECT_EQ(char_poly(testing::m2()).value, l({1, -6, 13, -8}));
  EXPECT_EQ(char_poly(uniform_matroid(1, 1)).value, l({1, -1}));
  EXPECT_EQ(char_poly(k_matroid()).value.to_string({"λ"}), "λ^3 - 6λ^2 + 11λ - 6");
}

TEST(CharPoly, LoopGivesFlaggedZero) {
  const CharacteristicPolynomial c = char_poly(from_graph(testing::non_simple_graph()));
  EXPECT_TRUE(c.zero_due_to_loop);
  EXPECT_TRUE(c.value.is_zero());
}

TEST(CharPoly, MatchesSubsetOracleAndVanishesAtOne) {
  for (const auto& [name, m] : testing::corpus()) {
    const CharacteristicPolynomial c = char_poly(m);
    if (!m.loops().empty()) {
      EXPECT_TRUE(c.value.is_zero());
      continue;
    }
    EXPECT_EQ(c.value, oracle::char_poly(m)) << name;
    if (m.coloops() != m.ground_set()) EXPECT_EQ(evaluate_at(c.value, Integer(1)), 0) << name;
    const auto w = nbc_sets(m).whitney_numbers();
    const Integer top = w.back();
    EXPECT_EQ(m.rank() % 2 == 0 ? top : Integer(-top), evaluate_at(c.value, Integer(0))) << name;
  }
}

}  // namespace
}  // namespace matroid
