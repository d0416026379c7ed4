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

#include "snakebox/merge_tree.hpp"

#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

namespace snakebox {

HyperEdge HyperEdge::Rotated(int k) const {
  switch (k % 3) {
    case 0: return *this;
    case 1: return {y, z, x};
    default: return {z, x, y};
  }
}

std::string HyperEdge::ToString() const {
  return "<" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ">";
}

MergeTree BuildMergeTree(int n) {
  if (n < 2) throw std::invalid_argument("merge tree needs n >= 2");
  MergeTree tree{n, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 5, 3}, {2, 3, 5},
                     {1, 3, 4}, {2, 4, 3}, {1, 4, 5}, {2, 5, 4}}};
  for (int k = 3; k <= n; ++k) {
    const int even = 2 * k;
    const int odd = 2 * k + 1;
    for (int x = 2; x <= even - 2; ++x) tree.edges.push_back({x, x + 1, even});
    for (int x = 2; x <= even - 2; ++x) tree.edges.push_back({x, x + 1, odd});
    tree.edges.push_back({1, 2, even});
    tree.edges.push_back({1, even, even - 1});
    tree.edges.push_back({1, odd, even - 1});
    tree.edges.push_back({1, even, odd});
    tree.edges.push_back({2, odd, even});
  }
  return tree;
}

TreeReport ValidateTree(const MergeTree& tree) {
  const int length = LengthFor(tree.n);
  const ClassLabel excluded{2, 1};
  auto fail = [](std::string why) { return TreeReport{false, std::move(why)}; };

  std::map<ClassLabel, int> index;
  for (ClassLabel label : AllClassLabels(tree.n)) {
    if (label != excluded) index.emplace(label, static_cast<int>(index.size()));
  }
  const int vertex_count = static_cast<int>(index.size());

  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  std::set<ClassLabel> covered;
  for (const HyperEdge& e : tree.edges) {
    const std::set<int> distinct{e.x, e.y, e.z};
    if (distinct.size() != 3 || *distinct.begin() < 1 || *distinct.rbegin() > length) {
      return fail("edge " + e.ToString() + " is not a triple of distinct elements of [" +
                  std::to_string(length) + "]");
    }
    const auto vs = e.Vertices();
    for (ClassLabel v : vs) {
      if (v == excluded) return fail("edge " + e.ToString() + " touches [2,1]");
      covered.insert(v);
    }
    // In a hypertree every edge merges three distinct components.
    std::set<int> roots;
    for (ClassLabel v : vs) roots.insert(find(index.at(v)));
    if (roots.size() != 3) return fail("edge " + e.ToString() + " closes a cycle");
    for (ClassLabel v : vs) parent[find(index.at(v))] = find(index.at(vs[0]));
  }
  for (const auto& [label, _] : index) {
    if (!covered.count(label)) return fail("vertex " + label.ToString() + " is not covered");
  }
  for (int v = 1; v < vertex_count; ++v) {
    if (find(v) != find(0)) return fail("tree is disconnected");
  }

  std::set<ClassLabel> reached{{1, 2}};
  for (const HyperEdge& e : tree.edges) {
    int already = 0;
    for (ClassLabel v : e.Vertices()) already += reached.count(v) ? 1 : 0;
    if (already != 1) {
      return fail("edge " + e.ToString() + " touches " + std::to_string(already) +
                  " reached vertices when processed, expected exactly 1");
    }
    for (ClassLabel v : e.Vertices()) reached.insert(v);
  }
  return {};
}

void WriteTree(std::ostream& os, const MergeTree& tree) {
  for (const HyperEdge& e : tree.edges) os << e.x << ' ' << e.y << ' ' << e.z << '\n';
}

}  // namespace snakebox
