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

#ifndef MATROID_F_INVARIANT_HPP_
#define MATROID_F_INVARIANT_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid {

/// Default bound on k^n for the truncated F-invariant enumeration.
inline constexpr std::uint64_t kFunctionGuard = 20'000'000;

/// f[e - 1] is the (positive) value of element e. True iff exactly one basis
/// attains the minimum of sum_{b in B} f(b).
bool is_m_generic(const Matroid& m, std::span<const int> f);

/// Monomial type of f: entry v - 1 counts the elements with f(e) = v.
using ValueCounts = std::vector<int>;

/// Number of M-generic f: E -> {1..k}, grouped by monomial type. Types with
/// no generic function are omitted.
std::map<ValueCounts, std::uint64_t> f_invariant_truncated(const Matroid& m, int k,
                                                           std::uint64_t guard = kFunctionGuard);

}  // namespace matroid

#endif  // MATROID_F_INVARIANT_HPP_
