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

#ifndef SNAKEBOX_SNAKE_HPP_
#define SNAKEBOX_SNAKE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "snakebox/permutation.hpp"

namespace snakebox {

// A cyclic Gray code given by its first codeword and the transitions
// between consecutive codewords; the last transition returns to `initial`.
struct Snake {
  int length = 0;            // permutation length 2n+1
  std::string construction;  // "he", "extended", ...
  Permutation initial;
  std::vector<Transition> transitions;

  std::size_t size() const { return transitions.size(); }
  // Codewords in order, size() of them.
  std::vector<Permutation> Codewords() const;

  friend bool operator==(const Snake&, const Snake&) = default;
};

// Cyclic sequences over S_N held as a successor table indexed by Lehmer
// rank. Several disjoint cycles may coexist; splices rewire successors.
class CyclicSequence {
 public:
  explicit CyclicSequence(int length);

  int length() const { return length_; }
  bool Contains(const Permutation& p) const { return next_[RankOf(p)] != kAbsent; }
  Permutation Next(const Permutation& p) const;
  void Link(const Permutation& from, const Permutation& to);
  // Adds the whole cycle `codewords`, in order.
  void AddCycle(const std::vector<Permutation>& codewords);
  void AddSnake(const Snake& snake);
  // Walks the cycle through `start`.
  Snake ToSnake(const Permutation& start, std::string construction) const;

 private:
  static constexpr std::uint32_t kAbsent = 0xFFFFFFFFu;
  int length_;
  std::vector<std::uint32_t> next_;
};

}  // namespace snakebox

#endif  // SNAKEBOX_SNAKE_HPP_
