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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "matroid/coalgebra.hpp"
#include "matroid/freedom.hpp"
#include "matroid/g_invariant.hpp"
#include "matroid/nbc.hpp"
#include "matroid/orlik_solomon.hpp"
#include "matroid/tutte.hpp"

namespace matroid {
namespace {

struct Check {
  bool pass = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0 means no time limit
  std::function<Check()> body;
};

std::string chi_text(const UnivariatePolynomial& p) { return p.to_string({"λ"}); }

ExteriorElement e(std::initializer_list<int> labels) {
  return ExteriorElement::monomial(ElementSet(labels));
}

Check char_poly_two_ways() {
  Check c;
  const Matroid k = testing::k_matroid();
  const UnivariatePolynomial mobius = char_poly_mobius(k);
  const UnivariatePolynomial nbc = char_poly_whitney(nbc_sets(k).whitney_numbers(), k.rank());
  c.expect(chi_text(mobius) == "λ^3 - 6λ^2 + 11λ - 6", "Möbius sum gives " + chi_text(mobius));
  c.expect(chi_text(nbc) == "λ^3 - 6λ^2 + 11λ - 6", "nbc count gives " + chi_text(nbc));
  return c;
}

Check nbc_catalog() {
  Check c;
  const NbcCatalog cat = nbc_sets(testing::k_matroid());
  std::vector<std::size_t> sizes;
  for (int k = 0; k <= 3; ++k) sizes.push_back(cat.of_size(k).size());
  c.expect(sizes == std::vector<std::size_t>{1, 6, 11, 6}, "sizes differ from (1,6,11,6)");
  const std::vector<ElementSet> expected{{1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 3, 6}};
  std::vector<ElementSet> top = cat.of_size(3);
  std::sort(top.begin(), top.end(), GlexLess{});
  c.expect(top == expected, "size-3 nbc sets differ");
  for (ElementSet s : top) c.expect(s.contains(1), s.to_string() + " misses 1");
  return c;
}

Check os_algebra_of_k() {
  Check c;
  const OsContext ctx(testing::k_matroid());
  const OsDimensions dims = os_dimensions(ctx);
  c.expect(dims.by_flat.at(ElementSet{1, 2, 3}) == 2, "dim A^123 != 2");
  c.expect(dims.by_flat.at(ElementSet::range(6)) == 6, "dim A^E != 6");
  const UnivariatePolynomial h = hilbert_series(ctx);
  c.expect(h.to_string({"t"}) == "6t^3 + 11t^2 + 6t + 1", "H = " + h.to_string({"t"}));
  // (-t)^3 chi(-1/t), expanded coefficient by coefficient.
  UnivariatePolynomial from_chi;
  const UnivariatePolynomial chi = char_poly_mobius(ctx.matroid());
  for (const auto& [exp, coeff] : chi.terms()) {
    const int k = 3 - exp[0];
    from_chi.add_term({k}, k % 2 == 0 ? coeff : Integer(-coeff));
  }
  c.expect(h == from_chi, "H differs from (-t)^3 chi(-1/t)");
  const ExteriorElement reduced = reduce_to_nbc(ctx, e({2, 3}));
  c.expect(reduced == e({1, 3}) - e({1, 2}), "reduce(e23) = " + reduced.to_string());
  return c;
}

Check m1_m2_isomorphism() {
  Check c;
  const std::string expected = "λ^3 - 6λ^2 + 13λ - 8";
  c.expect(chi_text(char_poly(testing::m1()).value) == expected, "chi(M1) mismatch");
  c.expect(chi_text(char_poly(testing::m2()).value) == expected, "chi(M2) mismatch");
  std::vector<ExteriorElement> images;
  for (int i = 1; i <= 6; ++i) images.push_back(ExteriorElement::generator(i));
  images[3] = parse_exterior_element("e3 - e5 + e6");
  images[4] = parse_exterior_element("e4 - e5 + e6");
  const Degree1MapReport r = verify_degree1_map(OsContext(testing::m1()), OsContext(testing::m2()), images);
  c.expect(r.ideal_preserved, "Phi does not preserve the ideal");
  c.expect(r.surjective, "Phi is not surjective in degree 1");
  c.expect(r.hilbert_match, "Hilbert series differ");
  return c;
}

Check g_of_k4() {
  Check c;
  const SymbolVector expected = parse_symbol_vector("576 [111000] + 144 [110100]");
  const Matroid k4 = from_graph(testing::k4_graph());
  const GInvariant brute = g_invariant(k4, GMethod::kPermutations);
  const GInvariant dp = g_invariant(k4, GMethod::kChainDp);
  const GInvariant closed = sparse_paving_g(6, 3, 4);
  c.expect(to_symbol_vector(brute) == expected, "permutations give " + brute.to_string());
  c.expect(to_symbol_vector(dp) == expected, "chain DP gives " + dp.to_string());
  c.expect(to_symbol_vector(closed) == expected, "closed form gives " + closed.to_string());
  return c;
}

Check g_of_p() {
  Check c;
  const std::string expected = "48 [110010] + 132 [110100] + 540 [111000]";
  const GInvariant general = g_invariant(testing::p_matroid());
  const std::vector<ElementSet> copoints{{1, 2, 3, 4}, {4, 5, 6}};
  const GInvariant closed = paving_g(6, 3, std::span<const ElementSet>(copoints));
  c.expect(general.to_string() == expected, "general gives " + general.to_string());
  c.expect(closed.to_string() == expected, "closed form gives " + closed.to_string());
  return c;
}

Check specialization_corpus() {
  Check c;
  int count = 0;
  for (const auto& [name, m] : testing::corpus()) {
    if (m.size() > 8) continue;
    ++count;
    c.expect(specialize_to_tutte(g_invariant(m)) == tutte(m), name + " differs");
  }
  c.expect(count >= 12, "corpus has only " + std::to_string(count) + " matroids");
  c.detail = c.pass ? std::to_string(count) + " matroids" : c.detail;
  return c;
}

Check k4_freedom_basis() {
  Check c;
  const Matroid k4 = from_graph(testing::k4_graph());
  const auto coeffs = tutte_in_freedom_basis(k4);
  const std::map<RankSequence, Rational> expected{{RankSequence::parse("111000"), -3},
                                                  {RankSequence::parse("110100"), 4}};
  c.expect(coeffs == expected, "coefficients differ");
  c.expect(freedom_tutte_combination(coeffs) == convert_coefficients<Rational>(tutte(k4)),
           "recombination differs from T(M(K4))");
  return c;
}

Check syzygies() {
  Check c;
  c.expect(verify_syzygy(parse_symbol_vector("[1010100] - [1011000] - [1100100] + [1101000]")),
           "four-term syzygy fails");
  const std::map<RankSequence, Rational> relation{{RankSequence::parse("1010100"), 1},
                                                  {RankSequence::parse("1011000"), -1},
                                                  {RankSequence::parse("1100100"), -1},
                                                  {RankSequence::parse("1101000"), 2},
                                                  {RankSequence::parse("1110000"), -1}};
  c.expect(freedom_tutte_relation(relation), "five-term relation fails");
  return c;
}

Check span_dimensions() {
  Check c;
  for (auto [n, r] : {std::pair{6, 3}, std::pair{7, 3}}) {
    const int dim = tutte_span_dimension(n, r);
    c.expect(dim == r * (n - r) + 1, "dim T(" + std::to_string(n) + "," + std::to_string(r) +
                                         ") = " + std::to_string(dim));
  }
  return c;
}

Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

ExteriorElement random_element(std::mt19937_64& rng, int n, int grade) {
  std::uniform_int_distribution<int> label(1, n);
  std::uniform_int_distribution<int> coeff(-3, 3);
  ExteriorElement out;
  for (int t = 0; t < 3; ++t) {
    ElementSet s;
    while (s.size() < grade) s = s.with(label(rng));
    out.add_term(s, Rational(coeff(rng)));
  }
  return out;
}

Check property_suite() {
  Check c;
  for (const auto& [name, m] : testing::corpus()) {
    const GInvariant g = g_invariant(m);
    c.expect(g.total() == factorial(m.size()), name + ": sum of g != n!");
    c.expect(g.coefficient(RankSequence::leading_ones(m.size(), m.rank())) ==
                 factorial(m.rank()) * factorial(m.size() - m.rank()) *
                     Integer(static_cast<unsigned long>(m.basis_count())),
             name + ": leading coefficient");
    const BivariatePolynomial t = tutte(m, TutteMethod::kSubsetExpansion);
    c.expect(t == tutte(m, TutteMethod::kDeletionContraction) && t == tutte(m, TutteMethod::kActivities),
             name + ": Tutte methods disagree");
    BivariatePolynomial swapped;
    for (const auto& [exp, coeff] : t.terms()) swapped.add_term({exp[1], exp[0]}, coeff);
    c.expect(tutte(dual(m), TutteMethod::kSubsetExpansion) == swapped, name + ": T(M*) != T(M;y,x)");
    c.expect(g_dual(g) == g_invariant(dual(m)), name + ": dual rule");
  }
  std::mt19937_64 rng(kDefaultSampleSeed);
  std::uniform_int_distribution<int> grade(0, 4);
  for (int i = 0; i < 100; ++i) {
    const int p = grade(rng);
    const ExteriorElement x = random_element(rng, 8, p);
    const ExteriorElement y = random_element(rng, 8, grade(rng));
    c.expect(boundary(boundary(x)).is_zero(), "dd != 0");
    const ExteriorElement lhs = boundary(wedge(x, y));
    const ExteriorElement second = wedge(x, boundary(y));
    const ExteriorElement rhs = wedge(boundary(x), y) + (p % 2 == 0 ? second : -second);
    c.expect(lhs == rhs, "derivation law fails");
  }
  return c;
}

Check convolutions() {
  Check c;
  const auto points = sample_points(10, kDefaultSampleSeed);
  for (const auto& [name, m] : testing::corpus()) {
    if (m.size() <= 6) c.expect(verify_R_convolution_symbolic(m), name + ": symbolic R-convolution");
    if (m.size() <= 8) c.expect(verify_R_convolution(m, points), name + ": numeric R-convolution");
  }
  for (const auto& [name, g] : testing::graph_corpus())
    if (g.vertex_count <= 5)
      c.expect(verify_chromatic_convolution_symbolic(g), name + ": chromatic convolution");
  return c;
}

Check freedom_characterization() {
  Check c;
  int checked = 0;
  for (int n = 0; n <= 7; ++n)
    for (int r = 0; r <= n; ++r)
      for (const RankSequence& s : rank_sequences(n, r)) {
        ++checked;
        c.expect(freedom_matroid(s) == freedom_matroid_incremental(s), "F(" + s.to_string() + ") differs");
      }
  if (c.pass) c.detail = std::to_string(checked) + " sequences";
  return c;
}

int run_all() {
  const std::vector<Criterion> criteria{
      {1, "chi(K) by Mobius sum and nbc count", 1, char_poly_two_ways},
      {2, "nbc catalog of K", 0, nbc_catalog},
      {3, "Orlik-Solomon dimensions, Hilbert series and reduction for K", 0, os_algebra_of_k},
      {4, "M1 and M2: equal chi and degree-1 isomorphism", 0, m1_m2_isomorphism},
      {5, "G(M(K4)) three ways", 5, g_of_k4},
      {6, "G(P) general and paving closed form", 0, g_of_p},
      {7, "G specializes to Tutte on the corpus", 60, specialization_corpus},
      {8, "M(K4) in the freedom basis", 0, k4_freedom_basis},
      {9, "syzygy and five-term Tutte relation", 0, syzygies},
      {10, "Tutte span dimensions (6,3) and (7,3)", 60, span_dimensions},
      {11, "property suite", 0, property_suite},
      {12, "convolution identities", 0, convolutions},
      {13, "freedom matroid characterization, n <= 7", 0, freedom_characterization},
  };
  int failures = 0;
  for (const Criterion& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = cr.body();
    } catch (const std::exception& ex) {
      result.pass = false;
      result.detail = std::string("exception: ") + ex.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_seconds > 0 && seconds >= cr.budget_seconds) {
      result.pass = false;
      result.detail += (result.detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!result.pass) ++failures;
    std::printf("%s %2d  %s (%.3f s%s%s)\n", result.pass ? "PASS" : "FAIL", cr.id, cr.title.c_str(),
                seconds, result.detail.empty() ? "" : ", ", result.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace matroid

int main() { return matroid::run_all(); }
