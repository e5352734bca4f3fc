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

#ifndef MATROID_NUMERIC_HPP_
#define MATROID_NUMERIC_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

namespace matroid {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(int n);
Integer binomial(int n, int k);

/// p/q in lowest terms.
Rational make_rational(const Integer& numerator, const Integer& denominator = 1);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& z);
/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Rank over Q of the matrix with the given rows (Gaussian elimination).
int matrix_rank(std::vector<std::vector<Rational>> rows);

/// Parses "p" or "p/q"; throws InputError on malformed text or q == 0.
Rational parse_rational(const std::string& text);

}  // namespace matroid

#endif  // MATROID_NUMERIC_HPP_
