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

#ifndef MATROID_IO_HPP_
#define MATROID_IO_HPP_

#include <optional>
#include <string>

#include "matroid/matroid.hpp"

namespace matroid {

/// A parsed matroid file. Exactly one constructor key is allowed:
///   {"bases": [[1,2],...], "n": 4}
///   {"circuits": [[1,2,3],...], "n": 6, "rank": 3}   ("rank" optional)
///   {"graph": {"vertices": 4, "edges": [[1,2],...]}}
///   {"uniform": {"r": 2, "n": 4}}
///   {"freedom": "110100"}  or  {"freedom": {"sequence": "110100"}}
///   {"paving": {"n": 6, "r": 3, "copoints": [[1,2,3,4],[4,5,6]]}}
/// plus an optional "name".
struct MatroidDocument {
  std::optional<std::string> name;
  Matroid matroid;
  /// Set for "graph" documents.
  std::optional<Graph> graph;
};

/// Throws InputError with the parse position or the constructor diagnostic.
MatroidDocument parse_document(const std::string& text);
MatroidDocument load_document(const std::string& path);

/// Canonical form {"bases": [...], "n": n, "name": ...} with sets ascending
/// and bases in increasing lexicographic order.
std::string serialize(const Matroid& m, const std::optional<std::string>& name = {});

}  // namespace matroid

#endif  // MATROID_IO_HPP_
