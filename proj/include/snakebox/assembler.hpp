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

// Merging every chain and all but one linkage into one snake of size
// (2n+1)!/2 - 2n + 1.
//
// The chains are joined along a spanning tree of the chain graph whose edges
// carry pairwise distinct linkages. The tree is built level by level: at
// level k the chains split into components by where 2k and 2k+1 sit in their
// names (written from 4, keeping only values <= 2k+1). One M[2k]/M[2k+1]
// edge per component forms a cycle through the components; one cycle edge
// is dropped and each component is handled at level k-1 with at most one of
// its linkages already taken. Level 3 closes with a 12-edge cycle.

#ifndef SNAKEBOX_ASSEMBLER_HPP_
#define SNAKEBOX_ASSEMBLER_HPP_

#include <vector>

#include "snakebox/chain.hpp"
#include "snakebox/connection_graph.hpp"
#include "snakebox/snake.hpp"

namespace snakebox {

struct SpanningSelection {
  std::vector<ConnectionEdge> edges;  // sorted by label
};

// An edge of the component-level cycle together with the components it joins.
struct ComponentCycleEdge {
  ComponentIndex from;
  ComponentIndex to;
  ConnectionEdge edge;
};

// Position (1-based) of `value` in `name` written from 4 and restricted to
// values <= 2*level+1.
int ProjectedPosition(const Cycle& name, int level, int value);

// The 12-edge distinct-label cycle on the chains of G_7 (M[6] for linkages
// with 7 one place before 6, cyclically over positions 2..5, else M[7]).
std::vector<ConnectionEdge> ChainCycleS7(const ChainGraph& graph);

// The cycle through all (2n-2)(2n-3) components at the top level, n >= 4.
std::vector<ComponentCycleEdge> ComponentCycle(const ChainGraph& graph);

// Distinct-label spanning tree for n = 3: the chain cycle minus the edge
// with the largest label.
SpanningSelection SelectSpanningTreeS7(const ChainGraph& graph);

// Distinct-label spanning tree for n >= 3. Throws ConstructionError if a
// level's rules do not yield a cycle or the result is not a spanning tree
// with distinct labels.
SpanningSelection SelectSpanningTree(const ChainGraph& graph);

// Rewires the successors of the three codewords of `site` so the cycles
// holding them become one. Throws ConstructionError if any of them no longer
// has its original successor.
void SpliceConnection(CyclicSequence& sequence, const SpliceSite& site);

// Splices the chains and the selected linkages together, applying the
// selected edges in the given order. The walk starts at the first codeword
// of chain 0.
Snake SpliceChains(const ChainSet& chains, const ChainGraph& graph,
                   const std::vector<ConnectionEdge>& edges);

struct HeAssembly {
  ChainSet chains;
  SpanningSelection selection;
  Snake snake;
};

HeAssembly AssembleHe(int n);
Snake AssembleHeSnake(int n);

}  // namespace snakebox

#endif  // SNAKEBOX_ASSEMBLER_HPP_
