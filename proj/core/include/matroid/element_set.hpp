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

#ifndef MATROID_ELEMENT_SET_HPP_
#define MATROID_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace matroid {

/// Largest element label an ElementSet can hold.
inline constexpr int kMaxLabel = 64;

/// A subset of the ground set {1, ..., n}, stored as a bitmask where label i
/// occupies bit i - 1. Labels are 1-based everywhere in the public API.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t mask) : mask_(mask) {}
  ElementSet(std::initializer_list<int> labels);

  static ElementSet from_labels(std::span<const int> labels);
  /// {1, ..., n}.
  static constexpr ElementSet range(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet singleton(int label) {
    return ElementSet(std::uint64_t{1} << (label - 1));
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int label) const {
    return label >= 1 && label <= kMaxLabel && ((mask_ >> (label - 1)) & 1U) != 0;
  }
  constexpr bool contains(ElementSet other) const {
    return (other.mask_ & ~mask_) == 0;
  }
  constexpr bool is_subset_of(ElementSet other) const { return other.contains(*this); }
  /// Smallest label, or 0 for the empty set.
  constexpr int min_label() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }
  /// Largest label, or 0 for the empty set.
  constexpr int max_label() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

  constexpr ElementSet with(int label) const { return ElementSet(mask_ | singleton(label).mask_); }
  constexpr ElementSet without(int label) const {
    return ElementSet(mask_ & ~singleton(label).mask_);
  }

  std::vector<int> labels() const;
  /// Compact form "124" when every label is a single digit, "{1,10,12}" otherwise.
  std::string to_string() const;

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(mask_ | o.mask_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(mask_ & o.mask_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(mask_ & ~o.mask_); }
  constexpr ElementSet operator^(ElementSet o) const { return ElementSet(mask_ ^ o.mask_); }
  ElementSet& operator|=(ElementSet o) { mask_ |= o.mask_; return *this; }
  ElementSet& operator&=(ElementSet o) { mask_ &= o.mask_; return *this; }
  ElementSet& operator-=(ElementSet o) { mask_ &= ~o.mask_; return *this; }

  constexpr bool operator==(const ElementSet&) const = default;
  /// Orders by raw mask, which is colexicographic order on label sets.
  constexpr auto operator<=>(const ElementSet&) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) f(std::countr_zero(m) + 1);
  }

 private:
  std::uint64_t mask_ = 0;
};

/// Graded lexicographic order: smaller sets first, then lexicographic on the
/// increasing label sequences.
constexpr bool glex_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  const std::uint64_t diff = a.mask() ^ b.mask();
  return (a.mask() & diff & (~diff + 1)) != 0;
}

struct GlexLess {
  constexpr bool operator()(ElementSet a, ElementSet b) const { return glex_less(a, b); }
};

/// Sign of the permutation that sorts the concatenation of the increasing
/// sequences of a and b; zero when they intersect.
constexpr int merge_sign(ElementSet a, ElementSet b) {
  if (!(a & b).empty()) return 0;
  int inversions = 0;
  for (std::uint64_t m = b.mask(); m != 0; m &= m - 1) {
    const int bit = std::countr_zero(m);
    const std::uint64_t above = bit >= 63 ? 0 : (a.mask() >> (bit + 1));
    inversions += std::popcount(above);
  }
  return (inversions & 1) != 0 ? -1 : 1;
}

/// Calls f(subset) for every subset of `set` of exactly k elements, in
/// lexicographic order.
template <class F>
void for_each_k_subset(ElementSet set, int k, F&& f) {
  const std::vector<int> items = set.labels();
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t m = 0;
    for (int i : idx) m |= std::uint64_t{1} << (items[i] - 1);
    f(ElementSet(m));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace matroid

#endif  // MATROID_ELEMENT_SET_HPP_
