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

// Classes and necklaces of the alternating group A_{2n+1}.
//
// A class [x,y] holds the even permutations ending in (x, y). Inside a class
// the front 2n-1 positions rotate under t_{2n-1}; each orbit is a necklace,
// named by the cyclic order of its front segment.

#ifndef SNAKEBOX_PARTITION_HPP_
#define SNAKEBOX_PARTITION_HPP_

#include <compare>
#include <string>
#include <vector>

#include "snakebox/permutation.hpp"

namespace snakebox {

// Permutation length 2n+1 for the construction parameter n.
constexpr int LengthFor(int n) { return 2 * n + 1; }
// Parameter n for a permutation of odd length 2n+1.
int ParameterFor(int length);

struct ClassLabel {
  int x = 0;  // value at position 2n
  int y = 0;  // value at position 2n+1

  friend bool operator==(ClassLabel, ClassLabel) = default;
  friend auto operator<=>(ClassLabel, ClassLabel) = default;
  std::string ToString() const;
};

class Necklace {
 public:
  Necklace() = default;
  // `front` is any rotation of the first 2n-1 entries.
  Necklace(ClassLabel label, std::vector<int> front);

  ClassLabel label() const { return label_; }
  const Cycle& name() const { return name_; }
  int length() const { return name_.length() + 2; }

  // [name..., x, y] with the name in canonical rotation.
  Permutation Representative() const;
  // The codeword whose front segment ends with `last`.
  Permutation WithLast(int last) const;
  // The front segment rotated to start at `first`, as used for display.
  std::vector<int> DisplayName(int first) const { return name_.StartingFrom(first); }
  // The 2n-1 codewords, starting at the representative, each the
  // t_{2n-1}-image of the previous one.
  std::vector<Permutation> Codewords() const;

  friend bool operator==(const Necklace&, const Necklace&) = default;
  friend auto operator<=>(const Necklace& a, const Necklace& b) {
    return a.Representative() <=> b.Representative();
  }
  std::string ToString() const;

 private:
  ClassLabel label_;
  Cycle name_;
};

// Throws std::invalid_argument for odd permutations or even lengths < 5.
ClassLabel ClassOf(const Permutation& p);
Necklace NecklaceOf(const Permutation& p);

// All 2n(2n+1) class labels, lexicographic.
std::vector<ClassLabel> AllClassLabels(int n);

// Every necklace of the class, sorted by representative. There are
// (2n-2)!/2 of them.
std::vector<Necklace> EnumerateNecklaces(int n, ClassLabel label);

std::string FormatSequence(const std::vector<int>& values);

}  // namespace snakebox

#endif  // SNAKEBOX_PARTITION_HPP_
