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

// The chain graph: chains are vertices, and a [2,1]-necklace (a linkage)
// joins the two chains it can be spliced between.
//
// For a linkage codeword L = [alpha, x, 2, 1] the splice runs
//   L -t-> [1, alpha, x, 2] ... chain A ... [alpha, 1, x, 2]
//     -t-> [2, alpha, 1, x] ... chain B ... [alpha, 2, 1, x]
//     -t-> [x, alpha, 2, 1]
// with t = t_{2n+1}. This is an M[x]-connection whenever A != B.

#ifndef SNAKEBOX_CONNECTION_GRAPH_HPP_
#define SNAKEBOX_CONNECTION_GRAPH_HPP_

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "snakebox/chain.hpp"
#include "snakebox/partition.hpp"

namespace snakebox {

// The [2,1]-necklaces in sorted order; their index is the linkage id.
std::vector<Necklace> EnumerateLinkages(int n);

// Codewords that realize the M[x]-connection through `linkage`.
struct SpliceSite {
  Permutation linkage_codeword;  // [alpha, x, 2, 1]
  Permutation first_exit;        // [alpha, 1, x, 2], predecessor of [1, alpha, x, 2]
  Permutation second_exit;       // [alpha, 2, 1, x], predecessor of [2, alpha, 1, x]
};
SpliceSite SpliceSiteFor(const Necklace& linkage, int x);

// Chain names joined by the M[x]-connection through `linkage`, from the
// closed form: (3 x) applied to the linkage name for the chain holding
// [alpha,1,x,2], and (5 6 ... 2t) for x = 2t or (5 6 ... 2t-1 2t+1) for
// x = 2t+1 for the chain holding [alpha,2,1,x]. Empty for x in {3,4,5},
// where both codewords lie in one chain.
std::optional<std::pair<Cycle, Cycle>> MConnectionEndpoints(const Necklace& linkage, int x);

// Owner of `p` in `chains`; throws std::invalid_argument for permutations in
// no chain (class [2,1] or odd).
int TraceChainOf(const Permutation& p, const ChainSet& chains);

// Chains holding the two exits of the M[x] splice site, found by lookup.
std::pair<int, int> TraceEndpoints(const Necklace& linkage, int x, const ChainSet& chains);

struct ConnectionEdge {
  int sign = 0;    // x of M[x]
  int label = 0;   // linkage id
  int first = 0;   // chain holding [alpha,1,x,2]
  int second = 0;  // chain holding [alpha,2,1,x]
};

// Positions (i, j) of 2n and 2n+1 in a name written from 4.
struct ComponentIndex {
  int i = 0;
  int j = 0;
  friend bool operator==(ComponentIndex, ComponentIndex) = default;
  friend auto operator<=>(ComponentIndex, ComponentIndex) = default;
};
ComponentIndex ComponentOf(const Cycle& name, int n);

class ChainGraph {
 public:
  int n() const { return n_; }
  int vertex_count() const { return vertex_count_; }
  const std::vector<Necklace>& linkages() const { return linkages_; }
  const std::vector<ConnectionEdge>& edges() const { return edges_; }
  const std::vector<ComponentIndex>& components() const { return components_; }
  const std::vector<Cycle>& chain_names() const { return chain_names_; }
  // Edge with the given label and sign, if that connection joins two chains.
  const ConnectionEdge* Find(int label, int sign) const;

 private:
  friend ChainGraph BuildChainGraph(const ChainSet& chains);
  int n_ = 0;
  int vertex_count_ = 0;
  std::vector<Necklace> linkages_;
  std::vector<ConnectionEdge> edges_;  // ordered by (label, sign)
  std::vector<ComponentIndex> components_;
  std::vector<Cycle> chain_names_;
};

// Every M[x]-connection for 6 <= x <= 2n+1. Endpoints come from the closed
// form and are checked against lookup in `chains`; any disagreement throws
// ConstructionError.
ChainGraph BuildChainGraph(const ChainSet& chains);

// Vertex list then "sign label first second" per edge.
void WriteGraph(std::ostream& os, const ChainGraph& graph, const ChainSet& chains);

}  // namespace snakebox

#endif  // SNAKEBOX_CONNECTION_GRAPH_HPP_
