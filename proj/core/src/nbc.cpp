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

#include "matroid/nbc.hpp"

#include <algorithm>

#include "matroid/errors.hpp"

namespace matroid {

namespace {

void require_loopless(const Matroid& m, const char* what) {
  if (const ElementSet loops = m.loops(); !loops.empty())
    throw InputError(std::string(what) + " requires a loopless matroid; loops: " +
                     loops.to_string());
}

/// The closure-minimum criterion for nbc-sets.
bool nbc_by_closure(const Matroid& m, ElementSet s) {
  bool ok = true;
  ElementSet suffix = s;
  s.for_each([&](int e) {
    if (ok && m.closure(suffix).min_label() != e) ok = false;
    suffix = suffix.without(e);
  });
  return ok;
}

}  // namespace

std::vector<ElementSet> broken_circuits(const Matroid& m) {
  require_loopless(m, "broken circuits");
  std::vector<ElementSet> out;
  for (ElementSet c : m.circuits()) out.push_back(c.without(c.min_label()));
  std::sort(out.begin(), out.end(), GlexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Integer> NbcCatalog::whitney_numbers() const {
  std::vector<Integer> w;
  for (const auto& [flat, sets] : by_flat) {
    for (ElementSet s : sets) {
      if (static_cast<int>(w.size()) <= s.size()) w.resize(static_cast<std::size_t>(s.size()) + 1, 0);
      ++w[static_cast<std::size_t>(s.size())];
    }
  }
  return w;
}

std::vector<ElementSet> NbcCatalog::all() const {
  std::vector<ElementSet> out;
  for (const auto& [flat, sets] : by_flat) out.insert(out.end(), sets.begin(), sets.end());
  std::sort(out.begin(), out.end(), GlexLess{});
  return out;
}

std::vector<ElementSet> NbcCatalog::of_size(int k) const {
  std::vector<ElementSet> out;
  for (ElementSet s : all())
    if (s.size() == k) out.push_back(s);
  return out;
}

bool NbcCatalog::contains(ElementSet s) const {
  for (const auto& [flat, sets] : by_flat)
    if (std::find(sets.begin(), sets.end(), s) != sets.end()) return true;
  return false;
}

NbcCatalog nbc_sets(const Matroid& m) {
  require_loopless(m, "nbc-sets");
  if (m.size() > kSubsetGuard)
    throw GuardError("nbc enumeration needs n <= " + std::to_string(kSubsetGuard));
  const std::vector<ElementSet> broken = broken_circuits(m);
  NbcCatalog catalog;
  const std::uint64_t count = std::uint64_t{1} << m.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const ElementSet s(mask);
    const bool by_containment =
        m.is_independent(s) &&
        std::none_of(broken.begin(), broken.end(), [s](ElementSet bc) { return s.contains(bc); });
    if (by_containment != nbc_by_closure(m, s))
      throw CrossCheckError("nbc criteria disagree on " + s.to_string());
    if (by_containment) catalog.by_flat[m.closure(s)].push_back(s);
  }
  for (auto& [flat, sets] : catalog.by_flat) std::sort(sets.begin(), sets.end(), GlexLess{});
  return catalog;
}

UnivariatePolynomial char_poly_mobius(const Matroid& m) {
  UnivariatePolynomial chi;
  for (const Flat& x : flat_lattice(m).flats) chi.add_term({m.rank() - x.rank}, x.mobius);
  return chi;
}

UnivariatePolynomial char_poly_whitney(const std::vector<Integer>& whitney, int rank) {
  UnivariatePolynomial chi;
  for (std::size_t k = 0; k < whitney.size(); ++k)
    chi.add_term({rank - static_cast<int>(k)}, (k % 2 == 0) ? whitney[k] : Integer(-whitney[k]));
  return chi;
}

CharacteristicPolynomial char_poly(const Matroid& m) {
  if (!m.loops().empty()) return {UnivariatePolynomial{}, true};
  UnivariatePolynomial by_mobius = char_poly_mobius(m);
  UnivariatePolynomial by_nbc = char_poly_whitney(nbc_sets(m).whitney_numbers(), m.rank());
  if (!(by_mobius == by_nbc))
    throw CrossCheckError("characteristic polynomial: Mobius sum " +
                          by_mobius.to_string({"λ"}) + " differs from nbc count " +
                          by_nbc.to_string({"λ"}));
  return {std::move(by_mobius), false};
}

}  // namespace matroid
