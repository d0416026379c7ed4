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

#include "snakebox/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace snakebox {
namespace {

void CheckSameSize(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("permutation length mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  }
}

void CheckTransition(const Permutation& p, Transition t) {
  if (t.index < 2 || t.index > p.size()) {
    throw std::out_of_range("transition t_" + std::to_string(t.index) +
                            " out of range for length " + std::to_string(p.size()));
  }
}

}  // namespace

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::span<const int>(entries.begin(), entries.size())) {}

Permutation::Permutation(std::span<const int> entries) {
  const auto n = static_cast<int>(entries.size());
  if (n > kMaxLength) {
    throw std::invalid_argument("permutation longer than " + std::to_string(kMaxLength));
  }
  std::array<bool, kMaxLength + 1> seen{};
  for (int v : entries) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[v] = true;
  }
  size_ = n;
  std::copy(entries.begin(), entries.end(), entries_.begin());
}

Permutation Permutation::Identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(v);
}

Permutation Permutation::FromKey(std::uint64_t key, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = static_cast<int>((key >> (4 * i)) & 0xF);
  return Permutation(v);
}

int Permutation::PositionOf(int value) const {
  for (int i = 0; i < size_; ++i) {
    if (entries_[i] == value) return i + 1;
  }
  throw std::invalid_argument("value " + std::to_string(value) + " not in permutation");
}

std::vector<int> Permutation::ToVector() const {
  return {entries_.begin(), entries_.begin() + size_};
}

std::uint64_t Permutation::Key() const {
  std::uint64_t key = 0;
  for (int i = 0; i < size_; ++i) key |= static_cast<std::uint64_t>(entries_[i]) << (4 * i);
  return key;
}

std::string Permutation::ToString() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << '[';
  for (int i = 1; i <= p.size(); ++i) os << (i > 1 ? "," : "") << p(i);
  return os << ']';
}

Permutation ApplyTransition(const Permutation& p, Transition t) {
  CheckTransition(p, t);
  Permutation out = p;
  const int i = t.index - 1;
  const std::uint8_t moved = p.entries_[i];
  std::copy_backward(p.entries_.begin(), p.entries_.begin() + i, out.entries_.begin() + i + 1);
  out.entries_[0] = moved;
  return out;
}

Permutation ApplyInverse(const Permutation& p, Transition t) {
  CheckTransition(p, t);
  Permutation out = p;
  const int i = t.index - 1;
  const std::uint8_t front = p.entries_[0];
  std::copy(p.entries_.begin() + 1, p.entries_.begin() + i + 1, out.entries_.begin());
  out.entries_[i] = front;
  return out;
}

int TransitionBetween(const Permutation& from, const Permutation& to) {
  CheckSameSize(from, to);
  const int n = from.size();
  if (n < 2) return 0;
  const int i = from.PositionOf(to(1));
  if (i < 2) return 0;
  // t_i leaves everything after position i in place.
  for (int k = 1; k < i; ++k) {
    if (to(k + 1) != from(k)) return 0;
  }
  for (int k = i + 1; k <= n; ++k) {
    if (to(k) != from(k)) return 0;
  }
  return i;
}

Permutation Compose(const Permutation& s, const Permutation& p) {
  CheckSameSize(s, p);
  Permutation out = p;
  for (int i = 0; i < p.size_; ++i) out.entries_[i] = s.entries_[p.entries_[i] - 1];
  return out;
}

Permutation Inverse(const Permutation& p) {
  Permutation out = p;
  for (int i = 0; i < p.size_; ++i) out.entries_[p.entries_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return out;
}

int CountInversions(std::span<const std::uint8_t> values) {
  int inversions = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) inversions += values[i] > values[j];
  }
  return inversions;
}

Parity ParityOf(const Permutation& p) {
  return CountInversions(p.entries()) % 2 == 0 ? Parity::kEven : Parity::kOdd;
}

bool IsEven(const Permutation& p) { return ParityOf(p) == Parity::kEven; }

int KendallDistance(const Permutation& a, const Permutation& b) {
  CheckSameSize(a, b);
  // Relative order of a with respect to b: where each entry of a sits in b.
  std::array<std::uint8_t, kMaxLength + 1> where{};
  for (int i = 1; i <= b.size(); ++i) where[b(i)] = static_cast<std::uint8_t>(i);
  std::array<std::uint8_t, kMaxLength> relative{};
  for (int i = 1; i <= a.size(); ++i) relative[i - 1] = where[a(i)];
  return CountInversions({relative.data(), static_cast<std::size_t>(a.size())});
}

Cycle::Cycle(std::vector<int> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("empty cycle");
  std::vector<int> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cycle elements must be distinct");
  }
  std::rotate(elements_.begin(), std::min_element(elements_.begin(), elements_.end()),
              elements_.end());
}

int Cycle::Apply(int value) const {
  const auto it = std::find(elements_.begin(), elements_.end(), value);
  if (it == elements_.end()) return value;
  return std::next(it) == elements_.end() ? elements_.front() : *std::next(it);
}

Permutation Cycle::ToPermutation(int n) const {
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = Apply(i);
  return Permutation(v);
}

std::vector<int> Cycle::StartingFrom(int first) const {
  std::vector<int> out = elements_;
  const auto it = std::find(out.begin(), out.end(), first);
  if (it == out.end()) throw std::invalid_argument("element not in cycle");
  std::rotate(out.begin(), it, out.end());
  return out;
}

std::string Cycle::ToString() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cycle& c) {
  os << '(';
  for (std::size_t i = 0; i < c.elements().size(); ++i) os << (i ? " " : "") << c.elements()[i];
  return os << ')';
}

std::vector<int> Relabel(const Cycle& sigma, std::span<const int> values) {
  std::vector<int> out(values.begin(), values.end());
  for (int& v : out) v = sigma.Apply(v);
  return out;
}

std::uint64_t Factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t RankOf(const Permutation& p) {
  const int n = p.size();
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j <= n; ++j) smaller_after += p(j) < p(i);
    rank = rank * static_cast<std::uint64_t>(n - i + 1) + static_cast<std::uint64_t>(smaller_after);
  }
  return rank;
}

Permutation Unrank(std::uint64_t rank, int n) {
  std::vector<int> digits(n);
  for (int i = n; i >= 1; --i) {
    const auto base = static_cast<std::uint64_t>(n - i + 1);
    digits[i - 1] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    out[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation(out);
}

void ForEachEvenPermutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    Permutation p(v);
    if (IsEven(p)) visit(p);
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace snakebox
