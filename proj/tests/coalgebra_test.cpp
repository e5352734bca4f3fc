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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "matroid/coalgebra.hpp"
#include "matroid/errors.hpp"
#include "matroid/tutte.hpp"

namespace matroid {
namespace {

TEST(Comultiply, CoLoopHasTwoTerms) {
  const TensorSum d = comultiply(uniform_matroid(1, 1));
  ASSERT_EQ(d.terms.size(), 2u);
  const std::string empty = canonical_key(Matroid());
  const std::string u11 = canonical_key(uniform_matroid(1, 1));
  EXPECT_EQ(d.terms.at({empty, u11}).multiplicity, 1u);
  EXPECT_EQ(d.terms.at({u11, empty}).multiplicity, 1u);
}

TEST(Comultiply, TotalMultiplicityAndCounit) {
  for (const auto& [name, m] : testing::corpus()) {
    const TensorSum d = comultiply(m);
    EXPECT_EQ(d.total_multiplicity(), std::uint64_t{1} << m.size()) << name;
    const std::string empty = canonical_key(Matroid());
    const std::string whole = canonical_key(m);
    EXPECT_GE(d.terms.at({empty, whole}).multiplicity, 1u) << name;
    EXPECT_GE(d.terms.at({whole, empty}).multiplicity, 1u) << name;
  }
  EXPECT_EQ(comultiply(testing::k_matroid()).total_multiplicity(), 64u);
}

using Triple = std::tuple<std::string, std::string, std::string>;

TEST(Comultiply, CoassociativityByBruteForce) {
  for (const Matroid& m : {uniform_matroid(1, 2), testing::k_matroid(), uniform_matroid(2, 4)}) {
    // (Delta x id) Delta: A subset of E, then B subset of A for M|A.
    // (id x Delta) Delta: A subset of E, then B subset of E - A for M/A.
    std::map<Triple, int> left;
    std::map<Triple, int> right;
    const std::uint64_t count = std::uint64_t{1} << m.size();
    for (std::uint64_t a = 0; a < count; ++a) {
      const Matroid ma = restriction(m, ElementSet(a)).matroid;
      const Matroid mc = contraction(m, ElementSet(a)).matroid;
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << ma.size()); ++b) {
        ++left[{canonical_key(restriction(ma, ElementSet(b)).matroid),
                canonical_key(contraction(ma, ElementSet(b)).matroid), canonical_key(mc)}];
      }
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << mc.size()); ++b) {
        ++right[{canonical_key(ma), canonical_key(restriction(mc, ElementSet(b)).matroid),
                 canonical_key(contraction(mc, ElementSet(b)).matroid)}];
      }
    }
    EXPECT_EQ(left, right);
  }
}

TEST(Comultiply, MultiplicativeOnDirectSums) {
  const std::vector<Matroid> small{uniform_matroid(1, 2), uniform_matroid(2, 3), uniform_matroid(0, 1),
                                   from_bases(3, {{1, 3}, {2, 3}})};
  for (const Matroid& a : small) {
    for (const Matroid& b : small) {
      if (a.size() + b.size() > 8) continue;
      std::map<std::pair<std::string, std::string>, std::uint64_t> expected;
      for (const auto& [ka, ta] : comultiply(a).terms)
        for (const auto& [kb, tb] : comultiply(b).terms)
          expected[{canonical_key(direct_sum(ta.left, tb.left)),
                    canonical_key(direct_sum(ta.right, tb.right))}] += ta.multiplicity * tb.multiplicity;
      std::map<std::pair<std::string, std::string>, std::uint64_t> actual;
      for (const auto& [k, t] : comultiply(direct_sum(a, b)).terms) actual[k] = t.multiplicity;
      EXPECT_EQ(actual, expected);
    }
  }
}

TEST(RConvolution, NumericAndSymbolic) {
  const ConvolutionPoint fixed{2, 3, 5, 7};
  EXPECT_TRUE(verify_R_convolution(testing::k_matroid(), std::span(&fixed, 1)));
  EXPECT_TRUE(verify_R_convolution_symbolic(uniform_matroid(1, 1)));
  const auto points = sample_points(10);
  for (const auto& [name, m] : testing::corpus()) {
    EXPECT_TRUE(verify_R_convolution(m, points)) << name;
    if (m.size() <= 6) EXPECT_TRUE(verify_R_convolution_symbolic(m)) << name;
  }
}

TEST(RConvolution, LambdaPrefactorFormFails) {
  const auto points = sample_points(3);
  EXPECT_FALSE(verify_R_convolution_lambda_form(uniform_matroid(1, 1), points));
  EXPECT_FALSE(verify_R_convolution_lambda_form(testing::k_matroid(), points));
}

TEST(SamplePoints, Deterministic) {
  const auto a = sample_points(5, 42);
  const auto b = sample_points(5, 42);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].x, b[i].x);
    EXPECT_EQ(a[i].xi, b[i].xi);
  }
  EXPECT_NE(sample_points(1, 1)[0].x + sample_points(1, 1)[0].y * 100,
            sample_points(1, 2)[0].x + sample_points(1, 2)[0].y * 100);
}

TEST(ChromaticConvolution, Examples) {
  const Graph triangle{3, {{1, 2}, {2, 3}, {1, 3}}};
  const std::pair<Rational, Rational> p{2, 1};
  EXPECT_TRUE(verify_chromatic_convolution(triangle, std::span(&p, 1)));
  EXPECT_EQ(evaluate_at(chromatic_poly(triangle), Integer(3)), 6);
  EXPECT_TRUE(verify_chromatic_convolution_symbolic(Graph{4, {}}));
  EXPECT_TRUE(verify_chromatic_convolution(testing::k4_graph(), sample_pairs(5)));
  for (const auto& [name, g] : testing::graph_corpus()) {
    EXPECT_TRUE(verify_chromatic_convolution_symbolic(g)) << name;
    EXPECT_TRUE(verify_chromatic_convolution(g, sample_pairs(4, 9))) << name;
  }
}

}  // namespace
}  // namespace matroid
