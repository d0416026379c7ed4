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

// Fixture loading and brute-force oracles shared by the tests. The oracles
// work on plain vectors so they share no code with the library.

#ifndef SNAKEBOX_TESTS_SUPPORT_HPP_
#define SNAKEBOX_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "snakebox/permutation.hpp"

namespace testing {

using Vec = std::vector<int>;

inline std::string DataPath(const std::string& name) { return std::string(SNAKEBOX_TEST_DATA) + "/" + name; }

inline std::vector<Vec> LoadRows(const std::string& name) {
  std::ifstream in(DataPath(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::vector<Vec> rows;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    Vec row;
    for (int v; is >> v;) row.push_back(v);
    rows.push_back(row);
  }
  return rows;
}

inline std::vector<snakebox::Permutation> LoadPermutations(const std::string& name) {
  std::vector<snakebox::Permutation> out;
  for (const Vec& row : LoadRows(name)) out.emplace_back(row);
  return out;
}

inline Vec ToVec(const snakebox::Permutation& p) { return p.ToVector(); }

// Push-to-the-top on a plain vector.
inline Vec PushToTop(Vec p, int i) {
  const int v = p[i - 1];
  p.erase(p.begin() + (i - 1));
  p.insert(p.begin(), v);
  return p;
}

inline int Inversions(const Vec& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) count += p[i] > p[j];
  }
  return count;
}

inline std::vector<Vec> AllPermutations(int n) {
  Vec p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Vec> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Distances from `source` to every permutation by breadth-first search over
// adjacent transpositions.
inline std::map<Vec, int> BfsDistances(const Vec& source) {
  std::map<Vec, int> dist{{source, 0}};
  std::queue<Vec> frontier;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vec p = frontier.front();
    frontier.pop();
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      Vec q = p;
      std::swap(q[k], q[k + 1]);
      if (dist.emplace(q, dist[p] + 1).second) frontier.push(q);
    }
  }
  return dist;
}

}  // namespace testing

#endif  // SNAKEBOX_TESTS_SUPPORT_HPP_
