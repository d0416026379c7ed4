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

#ifndef SNAKEBOX_MERGE_TREE_HPP_
#define SNAKEBOX_MERGE_TREE_HPP_

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "snakebox/partition.hpp"

namespace snakebox {

// <x,y,z> joins the class vertices [x,y], [y,z] and [z,x].
struct HyperEdge {
  int x = 0;
  int y = 0;
  int z = 0;

  std::array<ClassLabel, 3> Vertices() const { return {{{x, y}, {y, z}, {z, x}}}; }
  // Same edge with roles rotated so Vertices()[0] becomes Vertices()[k].
  HyperEdge Rotated(int k) const;
  friend bool operator==(HyperEdge, HyperEdge) = default;
  std::string ToString() const;
};

// The nearly spanning tree over every class vertex except [2,1]. Edge order
// is the order chains are grown in, so it is part of the construction.
struct MergeTree {
  int n = 0;
  std::vector<HyperEdge> edges;
};

MergeTree BuildMergeTree(int n);

struct TreeReport {
  bool valid = true;
  std::string failure;  // first violation, empty when valid
};

// Checks vertex coverage (everything but [2,1]), hypertree shape, and that
// every edge, taken in order from [1,2], touches exactly one vertex already
// reached.
TreeReport ValidateTree(const MergeTree& tree);

// One edge per line as "x y z".
void WriteTree(std::ostream& os, const MergeTree& tree);

}  // namespace snakebox

#endif  // SNAKEBOX_MERGE_TREE_HPP_
