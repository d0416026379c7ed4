// Copyright 2026 The snakebox Authors.
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


#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "doctest.h"
#include "snakebox/assembler.hpp"
#include "snakebox/verifier.hpp"
#include "support.hpp"

using namespace snakebox;

namespace {

using Edge = std::pair<ComponentIndex, ComponentIndex>;

Edge Unordered(ComponentIndex a, ComponentIndex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::set<Edge> FixtureEdges(const std::string& name) {
  std::set<Edge> edges;
  for (const auto& r : testing::LoadRows(name)) edges.insert(Unordered({r[0], r[1]}, {r[2], r[3]}));
  return edges;
}

// Union-find oracle: `edges` form a spanning tree over `vertices` chains.
bool IsSpanningTree(int vertices, const std::vector<ConnectionEdge>& edges) {
  if (static_cast<int>(edges.size()) != vertices - 1) return false;
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const ConnectionEdge& e : edges) {
    const int a = find(e.first);
    const int b = find(e.second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::map<int, std::size_t> Histogram(const Snake& snake) {
  std::map<int, std::size_t> h;
  for (Transition t : snake.transitions) ++h[t.index];
  return h;
}

}  // namespace

TEST_CASE("projected positions count from 4") {
  const Cycle c1({4, 5, 6, 7, 3});
  CHECK(ProjectedPosition(c1, 3, 6) == 3);
  CHECK(ProjectedPosition(c1, 3, 7) == 4);
}

TEST_CASE("the S_7 chain cycle matches the reference drawing") {
  const ChainSet chains = BuildAllChains(3);
  const ChainGraph graph = BuildChainGraph(chains);
  const auto cycle = ChainCycleS7(graph);
  REQUIRE(cycle.size() == 12);
  std::set<Edge> got;
  std::set<int> labels;
  for (const ConnectionEdge& e : cycle) {
    got.insert(Unordered(graph.components()[e.first], graph.components()[e.second]));
    labels.insert(e.label);
  }
  CHECK(got == FixtureEdges("s7_chain_cycle.txt"));
  CHECK(labels.size() == 12);
}

TEST_CASE("the S_9 component cycle matches the reference drawing") {
  const ChainSet chains = BuildAllChains(4);
  const ChainGraph graph = BuildChainGraph(chains);
  const auto cycle = ComponentCycle(graph);
  REQUIRE(cycle.size() == 30);
  std::set<Edge> got;
  std::set<ComponentIndex> vertices;
  for (const ComponentCycleEdge& e : cycle) {
    got.insert(Unordered(e.from, e.to));
    vertices.insert(e.from);
    vertices.insert(e.to);
  }
  CHECK(vertices.size() == 30);
  CHECK(got == FixtureEdges("s9_component_cycle.txt"));
}

TEST_CASE("spanning selections are trees with distinct labels") {
  for (int n = 3; n <= 4; ++n) {
    const ChainSet chains = BuildAllChains(n);
    const ChainGraph graph = BuildChainGraph(chains);
    const SpanningSelection selection = n == 3 ? SelectSpanningTreeS7(graph) : SelectSpanningTree(graph);
    CAPTURE(n);
    CHECK(IsSpanningTree(chains.size(), selection.edges));
    std::set<int> labels;
    for (const ConnectionEdge& e : selection.edges) labels.insert(e.label);
    CHECK(labels.size() == selection.edges.size());
    CHECK(labels.size() == graph.linkages().size() - 1);
  }
}

TEST_CASE("he snakes have the expected sizes and alphabets") {
  const std::map<int, std::size_t> sizes{{2, 57}, {3, 2515}, {4, 181433}};
  for (const auto& [n, size] : sizes) {
    const Snake snake = AssembleHeSnake(n);
    const int length = LengthFor(n);
    CAPTURE(n);
    CHECK(snake.size() == size);
    CHECK(snake.size() == Factorial(length) / 2 - 2 * n + 1);
    for (const auto& [index, count] : Histogram(snake)) {
      CHECK((index == length || index == length - 2));
    }
    const auto mode = n <= 3 ? VerifyMode::kFullDistance : VerifyMode::kStructural;
    CHECK(VerifySnake(snake, mode).passed());
  }
}

TEST_CASE("he snakes miss exactly one linkage") {
  for (int n = 2; n <= 3; ++n) {
    const auto missing = MissingCodewords(AssembleHeSnake(n));
    REQUIRE(missing.size() == static_cast<std::size_t>(2 * n - 1));
    const Necklace linkage = NecklaceOf(missing.front());
    CHECK(linkage.label() == ClassLabel{2, 1});
    const auto codewords = linkage.Codewords();
    CHECK(std::set<Permutation>(codewords.begin(), codewords.end()) ==
          std::set<Permutation>(missing.begin(), missing.end()));
  }
}

TEST_CASE("splicing twice at one site fails") {
  const ChainSet chains = BuildAllChains(3);
  const ChainGraph graph = BuildChainGraph(chains);
  const ConnectionEdge& e = graph.edges().front();
  CyclicSequence sequence(7);
  for (const Chain& c : chains.chains()) sequence.AddCycle(c.codewords);
  for (const Necklace& l : graph.linkages()) sequence.AddCycle(l.Codewords());
  const SpliceSite site = SpliceSiteFor(graph.linkages()[e.label], e.sign);
  SpliceConnection(sequence, site);
  CHECK_THROWS_AS(SpliceConnection(sequence, site), ConstructionError);
}

TEST_CASE("n below 2 is rejected") { CHECK_THROWS_AS(AssembleHe(1), std::invalid_argument); }
