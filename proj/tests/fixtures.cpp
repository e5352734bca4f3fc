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

#include "fixtures.hpp"

#include "matroid/freedom.hpp"
#include "matroid/g_invariant.hpp"

namespace matroid::testing {

namespace {

Matroid rank3(int n, std::vector<ElementSet> lines) {
  return from_circuits(n, lines, 3);
}

}  // namespace

Matroid k_matroid() { return rank3(6, {{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}}); }

Graph k4_graph() { return Graph{4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {2, 4}, {1, 4}}}; }

Matroid m1() { return rank3(6, {{1, 2, 3}, {4, 5, 6}}); }

Matroid m2() { return rank3(6, {{1, 2, 3}, {3, 4, 5}}); }

Matroid p_matroid() {
  const std::vector<ElementSet> copoints{{1, 2, 3, 4}, {4, 5, 6}};
  return paving_matroid(6, 3, copoints);
}

Matroid q_matroid() {
  return rank3(7, {{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}, {3, 7}, {1, 2, 7}, {4, 5, 7}});
}

Matroid l_matroid() {
  return rank3(7, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {4, 5, 6}, {6, 7}, {4, 5, 7}});
}

Graph non_simple_graph() { return Graph{3, {{1, 2}, {2, 3}, {1, 3}, {1, 2}, {3, 3}}}; }

std::vector<Named> corpus() {
  std::vector<Named> out{
      {"U01", uniform_matroid(0, 1)},
      {"U11", uniform_matroid(1, 1)},
      {"U12", uniform_matroid(1, 2)},
      {"U23", uniform_matroid(2, 3)},
      {"U24", uniform_matroid(2, 4)},
      {"U36", uniform_matroid(3, 6)},
      {"K", k_matroid()},
      {"Kdual", dual(k_matroid())},
      {"M1", m1()},
      {"M2", m2()},
      {"P", p_matroid()},
      {"Pdual", dual(p_matroid())},
      {"U23+U12", direct_sum(uniform_matroid(2, 3), uniform_matroid(1, 2))},
      {"U11+U01+U23", direct_sum(direct_sum(uniform_matroid(1, 1), uniform_matroid(0, 1)),
                                 uniform_matroid(2, 3))},
      {"F110100", freedom_matroid(RankSequence::parse("110100"))},
      {"F0101101", freedom_matroid(RankSequence::parse("0101101"))},
      {"F1010100", freedom_matroid(RankSequence::parse("1010100"))},
      {"nonsimple", from_graph(non_simple_graph())},
      {"Q", q_matroid()},
      {"L", l_matroid()},
      {"U25+U11", direct_sum(uniform_matroid(2, 5), uniform_matroid(1, 1))},
      {"U48", uniform_matroid(4, 8)},
  };
  return out;
}

std::vector<std::pair<std::string, Graph>> graph_corpus() {
  return {
      {"empty0", Graph{0, {}}},
      {"edgeless3", Graph{3, {}}},
      {"edge", Graph{2, {{1, 2}}}},
      {"triangle", Graph{3, {{1, 2}, {2, 3}, {1, 3}}}},
      {"path4", Graph{4, {{1, 2}, {2, 3}, {3, 4}}}},
      {"K4", k4_graph()},
      {"C5", Graph{5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}}},
      {"two_components", Graph{5, {{1, 2}, {3, 4}, {4, 5}, {3, 5}}}},
      {"multi", Graph{3, {{1, 2}, {1, 2}, {2, 3}}}},
      {"loop", Graph{3, {{1, 2}, {2, 2}}}},
      {"K4_plus_pendant", Graph{5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {2, 4}, {1, 4}, {4, 5}}}},
  };
}

}  // namespace matroid::testing
