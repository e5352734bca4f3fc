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

#ifndef MATROID_TESTS_FIXTURES_HPP_
#define MATROID_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "matroid/matroid.hpp"

namespace matroid::testing {

/// Rank-3 matroid on 6 points with 3-point lines 123, 156, 246, 345.
Matroid k_matroid();
/// K4 with vertices 1..4 and edges numbered so the triangles are 123, 156,
/// 246, 345.
Graph k4_graph();
/// Rank 3 on 6 points, 3-point lines 123 and 456.
Matroid m1();
/// Rank 3 on 6 points, 3-point lines 123 and 345.
Matroid m2();
/// Rank 3 on 6 points, lines 1234 and 456 meeting at 4.
Matroid p_matroid();
/// K with a point 7 parallel to 3.
Matroid q_matroid();
/// P with a point 7 parallel to 6.
Matroid l_matroid();
/// Triangle 1-2-3 with edge 4 parallel to edge 1 and a loop 5.
Graph non_simple_graph();

struct Named {
  std::string name;
  Matroid matroid;
};

/// Corpus of small matroids (n <= 8): uniform, K, M1, M2, P, duals, direct
/// sums, freedom matroids, and a matroid with a loop and a parallel pair.
std::vector<Named> corpus();

/// Small graphs (<= 5 vertices) including loops, multi-edges, and several
/// components.
std::vector<std::pair<std::string, Graph>> graph_corpus();

}  // namespace matroid::testing

#endif  // MATROID_TESTS_FIXTURES_HPP_
