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

#include "matroid/numeric.hpp"

#include <cctype>

#include "matroid/errors.hpp"

namespace matroid {

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

int matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const std::vector<Rational>& top = rows[static_cast<std::size_t>(rank)];
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational factor = rows[i][c] / top[c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * top[j];
    }
    ++rank;
  }
  return rank;
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw InputError("malformed rational '" + text + "'");
  Integer p(num[0] == '+' ? num.substr(1) : num);
  Integer q(den[0] == '+' ? den.substr(1) : den);
  if (q == 0) throw InputError("zero denominator in '" + text + "'");
  return make_rational(p, q);
}

}  // namespace matroid
