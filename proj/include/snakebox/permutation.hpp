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

#ifndef SNAKEBOX_PERMUTATION_HPP_
#define SNAKEBOX_PERMUTATION_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace snakebox {

// Values are packed four bits apiece into a 64-bit key, which caps the length.
inline constexpr int kMaxLength = 15;

enum class Parity { kEven, kOdd };

// Push-to-the-top operation t_i, 2 <= i <= n.
struct Transition {
  int index = 0;
  friend bool operator==(Transition, Transition) = default;
};

// A permutation of [n] = {1..n} in vector notation. Positions are 1-based in
// every public accessor: p(i) is the value at position i.
class Permutation {
 public:
  Permutation() = default;
  Permutation(std::initializer_list<int> entries);
  explicit Permutation(std::span<const int> entries);

  static Permutation Identity(int n);
  // Inverse of Key(); `n` is needed because trailing zeros are ambiguous.
  static Permutation FromKey(std::uint64_t key, int n);

  int size() const { return size_; }
  int operator()(int position) const { return entries_[position - 1]; }
  // 1-based position of `value`.
  int PositionOf(int value) const;

  std::span<const std::uint8_t> entries() const {
    return {entries_.data(), static_cast<std::size_t>(size_)};
  }
  std::vector<int> ToVector() const;
  std::uint64_t Key() const;
  std::string ToString() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  friend Permutation ApplyTransition(const Permutation&, Transition);
  friend Permutation ApplyInverse(const Permutation&, Transition);
  friend Permutation Compose(const Permutation&, const Permutation&);
  friend Permutation Inverse(const Permutation&);

  std::array<std::uint8_t, kMaxLength> entries_{};
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// t_i: the entry at position i moves to the front.
Permutation ApplyTransition(const Permutation& p, Transition t);
// t_i^{-1}: the front entry moves to position i.
Permutation ApplyInverse(const Permutation& p, Transition t);
// The index i with t_i(from) == to, or 0 if no single p-transition does it.
int TransitionBetween(const Permutation& from, const Permutation& to);

// (s p)(i) = s(p(i)).
Permutation Compose(const Permutation& s, const Permutation& p);
Permutation Inverse(const Permutation& p);
Parity ParityOf(const Permutation& p);
bool IsEven(const Permutation& p);
int CountInversions(std::span<const std::uint8_t> values);
// Minimum number of adjacent transpositions taking a to b.
int KendallDistance(const Permutation& a, const Permutation& b);

// A single cycle in cyclic notation. Stored rotated so the minimum element
// comes first; rotations of the same sequence compare equal.
class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(std::vector<int> elements);

  const std::vector<int>& elements() const { return elements_; }
  int length() const { return static_cast<int>(elements_.size()); }
  // Image of `value` under the cycle; values outside it are fixed.
  int Apply(int value) const;
  // The cycle as a permutation of [n].
  Permutation ToPermutation(int n) const;
  // The elements rotated to start at `first` (which must be present).
  std::vector<int> StartingFrom(int first) const;
  std::string ToString() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<int> elements_;
};

std::ostream& operator<<(std::ostream& os, const Cycle& c);

// Value relabeling of a sequence: every entry v becomes sigma(v).
std::vector<int> Relabel(const Cycle& sigma, std::span<const int> values);

std::uint64_t Factorial(int n);

// Lehmer-code ranking of S_n into [0, n!). Used for dense per-permutation
// tables; practical up to n = 12.
std::uint64_t RankOf(const Permutation& p);
Permutation Unrank(std::uint64_t rank, int n);

// Calls `visit` on every even permutation of [n] in lexicographic order.
void ForEachEvenPermutation(int n, const std::function<void(const Permutation&)>& visit);

}  // namespace snakebox

template <>
struct std::hash<snakebox::Permutation> {
  std::size_t operator()(const snakebox::Permutation& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.Key());
  }
};

#endif  // SNAKEBOX_PERMUTATION_HPP_
