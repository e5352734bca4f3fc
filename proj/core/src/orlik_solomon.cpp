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

#include "matroid/orlik_solomon.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "matroid/errors.hpp"

namespace matroid {

namespace detail {

struct NormalFormCache {
  std::mutex mutex;
  std::unordered_map<std::uint64_t, ExteriorElement> forms;
};

}  // namespace detail

OsContext::OsContext(Matroid m) : matroid_(std::move(m)) {
  if (!matroid_.is_simple())
    throw InputError("the Orlik-Solomon machinery needs a simple matroid; simplify first");
  nbc_ = nbc_sets(matroid_);
  nbc_table_.assign(std::size_t{1} << matroid_.size(), 0);
  for (ElementSet s : nbc_.all()) nbc_table_[s.mask()] = 1;
  for (ElementSet c : matroid_.circuits()) broken_.emplace_back(c.without(c.min_label()), c.min_label());
  std::sort(broken_.begin(), broken_.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return glex_less(a.first, b.first);
    return a.second < b.second;
  });
  cache_ = std::make_unique<detail::NormalFormCache>();
}

OsContext::~OsContext() = default;
OsContext::OsContext(OsContext&&) noexcept = default;
OsContext& OsContext::operator=(OsContext&&) noexcept = default;

bool OsContext::is_nbc(ElementSet s) const {
  return matroid_.ground_set().contains(s) && nbc_table_[s.mask()] != 0;
}

ExteriorElement OsContext::normal_form(ElementSet s) const {
  if (!matroid_.ground_set().contains(s))
    throw InputError("monomial e" + s.to_string() + " uses labels outside the ground set");
  if (is_nbc(s)) return ExteriorElement::monomial(s);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->forms.find(s.mask()); it != cache_->forms.end()) return it->second;
  }

  // Worklist over monomials, always rewriting the glex-largest one. Every
  // rewrite only produces glex-smaller monomials, so each is visited once.
  ExteriorElement work = ExteriorElement::monomial(s);
  ExteriorElement result;
  while (!work.is_zero()) {
    const auto last = std::prev(work.terms().end());
    const ElementSet current = last->first;
    const Rational coeff = last->second;
    work.add_term(current, Rational(-coeff));
    if (is_nbc(current)) {
      result.add_term(current, coeff);
      continue;
    }
    if (!matroid_.is_independent(current)) continue;
    const auto witness = std::find_if(broken_.begin(), broken_.end(), [current](const auto& bc) {
      return current.contains(bc.first);
    });
    if (witness == broken_.end())
      throw CrossCheckError("independent non-nbc set " + current.to_string() +
                            " contains no broken circuit");
    const int m = witness->second;
    const ElementSet joined = current.with(m);
    // d(e_J) = sum_j (-1)^j e_{J - j_j} (0-based j) lies in I(M); solve for
    // the term that drops m.
    int m_position = 0;
    joined.for_each([&](int e) {
      if (e < m) ++m_position;
    });
    const Rational scale = (m_position % 2 == 0) ? Rational(-coeff) : coeff;
    int position = 0;
    joined.for_each([&](int e) {
      if (e != m) {
        const ElementSet term = joined.without(e);
        if (matroid_.is_independent(term))
          work.add_term(term, position % 2 == 0 ? scale : Rational(-scale));
      }
      ++position;
    });
  }

  std::lock_guard lock(cache_->mutex);
  cache_->forms.emplace(s.mask(), result);
  return result;
}

ExteriorElement reduce_to_nbc(const OsContext& ctx, const ExteriorElement& a) {
  ExteriorElement out;
  for (const auto& [s, c] : a.terms()) {
    if (ctx.is_nbc(s)) {
      out.add_term(s, c);
      continue;
    }
    const ExteriorElement form = ctx.normal_form(s);
    for (const auto& [t, d] : form.terms()) out.add_term(t, c * d);
  }
  return out;
}

std::vector<ExteriorElement> os_ideal_generators(const Matroid& m) {
  std::vector<ExteriorElement> out;
  for (ElementSet c : m.circuits()) out.push_back(boundary(ExteriorElement::monomial(c)));
  return out;
}

OsDimensions os_dimensions(const OsContext& ctx) {
  OsDimensions dims;
  dims.by_degree.assign(static_cast<std::size_t>(ctx.matroid().rank()) + 1, 0);
  for (const auto& [flat, sets] : ctx.nbc().by_flat) {
    dims.by_flat[flat] = static_cast<int>(sets.size());
    dims.by_degree[static_cast<std::size_t>(ctx.matroid().rank(flat))] += static_cast<int>(sets.size());
  }
  for (const Flat& x : flat_lattice(ctx.matroid()).flats) {
    Integer expected = (x.rank % 2 == 0) ? x.mobius : Integer(-x.mobius);
    auto it = dims.by_flat.find(x.set);
    const int found = it == dims.by_flat.end() ? 0 : it->second;
    if (expected != found)
      throw CrossCheckError("dim A^X for X=" + x.set.to_string() + " is " + std::to_string(found) +
                            " but (-1)^r(X) mu = " + to_string(expected));
    if (it == dims.by_flat.end()) dims.by_flat[x.set] = 0;
  }
  return dims;
}

UnivariatePolynomial hilbert_series(const OsContext& ctx) {
  const OsDimensions dims = os_dimensions(ctx);
  UnivariatePolynomial h;
  for (std::size_t k = 0; k < dims.by_degree.size(); ++k)
    h.add_term({static_cast<int>(k)}, Integer(dims.by_degree[k]));

  const int r = ctx.matroid().rank();
  UnivariatePolynomial from_chi;
  const UnivariatePolynomial chi = char_poly(ctx.matroid()).value;
  for (const auto& [e, c] : chi.terms()) {
    const int k = e[0];
    from_chi.add_term({r - k}, ((r - k) % 2 == 0) ? c : Integer(-c));
  }
  if (!(h == from_chi))
    throw CrossCheckError("Hilbert series " + h.to_string({"t"}) + " differs from (-t)^r chi(-1/t) = " +
                          from_chi.to_string({"t"}));
  return h;
}

Degree1MapReport verify_degree1_map(const OsContext& source, const OsContext& target,
                                    const std::vector<ExteriorElement>& images) {
  const int n = source.matroid().size();
  if (static_cast<int>(images.size()) != n)
    throw InputError("need one image per source element: expected " + std::to_string(n) + ", got " +
                     std::to_string(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (const auto& [s, c] : images[i].terms())
      if (s.size() != 1)
        throw InputError("image of e" + std::to_string(i + 1) + " is not of degree 1: " +
                         images[i].to_string());
    if (images[i].max_label() > target.matroid().size())
      throw InputError("image of e" + std::to_string(i + 1) + " uses labels outside the target");
  }

  auto image_of = [&](ElementSet s) {
    ExteriorElement out = ExteriorElement::one();
    s.for_each([&](int e) { out = wedge(out, images[static_cast<std::size_t>(e - 1)]); });
    return out;
  };

  Degree1MapReport report;
  report.ideal_preserved = true;
  for (ElementSet c : source.matroid().circuits()) {
    ExteriorElement mapped;
    const ExteriorElement relation = boundary(ExteriorElement::monomial(c));
    for (const auto& [s, coeff] : relation.terms())
      mapped += coeff * image_of(s);
    if (!reduce_to_nbc(target, mapped).is_zero()) {
      report.ideal_preserved = false;
      report.failing_circuit = c;
      break;
    }
  }

  const int m = target.matroid().size();
  std::vector<std::vector<Rational>> rows;
  for (const ExteriorElement& img : images) {
    std::vector<Rational> row(static_cast<std::size_t>(m), 0);
    for (const auto& [s, c] : img.terms()) row[static_cast<std::size_t>(s.min_label() - 1)] = c;
    rows.push_back(std::move(row));
  }
  report.surjective = matrix_rank(std::move(rows)) == m;
  report.hilbert_match = hilbert_series(source) == hilbert_series(target);
  return report;
}

}  // namespace matroid
