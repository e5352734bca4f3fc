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

#include "matroid/element_set.hpp"

#include "matroid/errors.hpp"

namespace matroid {

ElementSet::ElementSet(std::initializer_list<int> labels)
    : ElementSet(from_labels(std::span<const int>(labels.begin(), labels.size()))) {}

ElementSet ElementSet::from_labels(std::span<const int> labels) {
  std::uint64_t mask = 0;
  for (int label : labels) {
    if (label < 1 || label > kMaxLabel)
      throw InputError("element label " + std::to_string(label) + " outside 1.." +
                       std::to_string(kMaxLabel));
    mask |= std::uint64_t{1} << (label - 1);
  }
  return ElementSet(mask);
}

std::vector<int> ElementSet::labels() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int e) { out.push_back(e); });
  return out;
}

std::string ElementSet::to_string() const {
  if (max_label() <= 9) {
    if (empty()) return "{}";
    std::string out;
    for_each([&](int e) { out += static_cast<char>('0' + e); });
    return out;
  }
  std::string out = "{";
  bool first = true;
  for_each([&](int e) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

}  // namespace matroid
